#include "ybe/crypto.hpp"

#include "ybe/error.hpp"

#include <cctype>
#include <random>
#include <sstream>

namespace ybe {

Blocks encode_text(std::string_view text) {
  Blocks out;
  out.reserve(text.size());
  for (char c : text) {
    const unsigned char u = static_cast<unsigned char>(std::toupper(static_cast<unsigned char>(c)));
    if (u == ' ') {
      out.emplace_back(0);
    } else if (u >= 'A' && u <= 'Z') {
      out.emplace_back(u - 'A' + 1);
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("unsupported character '") + c + "' (letters and space only)");
    }
  }
  return out;
}

std::string decode_text(const Blocks& blocks) {
  std::string out;
  out.reserve(blocks.size());
  for (const BigInt& b : blocks) {
    if (b < 0 || b > 26) {
      throw Error(ErrorCode::OutOfRange, "block " + b.str() + " is not a letter code 0..26");
    }
    const int v = b.convert_to<int>();
    out += v == 0 ? ' ' : static_cast<char>('A' + v - 1);
  }
  return out;
}

Blocks parse_blocks(std::string_view text) {
  std::istringstream in{std::string(text)};
  Blocks out;
  std::string token;
  while (in >> token) out.push_back(parse_bigint(token));
  return out;
}

std::string format_blocks(const Blocks& blocks, bool text_mode) {
  std::string out;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    if (t) out += ' ';
    std::string s = blocks[t].str();
    if (text_mode && s.size() < 2) s.insert(0, 2 - s.size(), '0');
    out += s;
  }
  return out;
}

namespace {

template <typename F>
Blocks blockwise(const Blocks& blocks, F&& f) {
  Blocks out;
  out.reserve(blocks.size());
  for (const BigInt& b : blocks) {
    if (b < 0) throw Error(ErrorCode::OutOfRange, "negative block");
    out.push_back(b == 0 ? BigInt(0) : f(b));
  }
  return out;
}

}  // namespace

Blocks encrypt(const Blocks& blocks, const LazyKey& key) {
  return blockwise(blocks, [&](const BigInt& b) { return key.eval(b); });
}

Blocks decrypt(const Blocks& blocks, const LazyKey& key) {
  return blockwise(blocks, [&](const BigInt& b) { return key.eval_inverse(b); });
}

SignedMessage sign(const Blocks& message, const LazyKey& sender, const LazyKey& receiver) {
  SignedMessage out;
  out.intermediate = decrypt(message, sender);
  out.transmitted = encrypt(out.intermediate, receiver);
  return out;
}

Blocks open_signature(const Blocks& transmitted, const LazyKey& receiver, const LazyKey& sender) {
  return encrypt(decrypt(transmitted, receiver), sender);
}

Permutation SharedKey::materialize(std::uint64_t max_points) const {
  return compose(outer.materialize(max_points), inner.materialize(max_points));
}

KeyExchange key_exchange(std::shared_ptr<const Solution> base, unsigned k, const BigInt& i,
                         const BigInt& j, const BigInt& l, const KeyExchangeOptions& options) {
  if (!base) throw Error(ErrorCode::InvalidArgument, "missing base solution");
  const BigInt size = pumped_size(base->size(), k);
  for (const BigInt* x : {&i, &j, &l}) {
    if (*x < 1 || *x > size) {
      throw Error(ErrorCode::OutOfRange, "key index " + x->str() + " outside 1.." + size.str());
    }
  }
  auto key = [&](const BigInt& index) { return LazyKey::lazy(base, index, k, options.limits); };

  const LazyKey public_key = key(i);
  const BigInt bob_to_alice = public_key.eval(j);
  const BigInt alice_to_bob = public_key.eval(l);
  const BigInt bob_recovered = public_key.eval_inverse(alice_to_bob);
  const BigInt alice_recovered = public_key.eval_inverse(bob_to_alice);

  LazyKey bob_outer = key(bob_recovered);
  const BigInt bob_inner = bob_outer.eval_inverse(j);
  LazyKey alice_outer = key(alice_recovered);
  const BigInt alice_inner = alice_outer.eval_inverse(l);

  KeyExchange out{i,
                  j,
                  l,
                  bob_to_alice,
                  alice_to_bob,
                  bob_recovered,
                  alice_recovered,
                  bob_inner,
                  alice_inner,
                  SharedKey{std::move(bob_outer), key(bob_inner)},
                  SharedKey{std::move(alice_outer), key(alice_inner)}};

  if (size <= options.max_points) {
    out.exhaustive = true;
    out.points_compared = size.convert_to<std::size_t>();
    out.keys_equal = out.bob_key.materialize(options.max_points) ==
                     out.alice_key.materialize(options.max_points);
  } else {
    std::mt19937_64 rng(options.seed);
    out.keys_equal = true;
    for (std::size_t t = 0; t < options.sample_points; ++t) {
      const BigInt m = uniform_point(rng, size);
      ++out.points_compared;
      if (out.bob_key.eval(m) != out.alice_key.eval(m)) {
        out.keys_equal = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace ybe
