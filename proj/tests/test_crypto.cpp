#include "support.hpp"

#include "ybe/crypto.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/error.hpp"
#include "ybe/pump.hpp"

#include <doctest.h>

#include <map>

using namespace ybe;
using namespace testing_support;

namespace {

std::shared_ptr<const Solution> shared(Solution s) {
  return std::make_shared<const Solution>(std::move(s));
}

Blocks blocks(std::initializer_list<int> values) {
  Blocks out;
  for (int v : values) out.emplace_back(v);
  return out;
}

const Blocks song = blocks({9, 20, 19, 0, 1, 0, 23, 15, 14, 4, 5, 18, 6, 21, 12, 0, 12, 9, 6, 5});

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("text codec") {
  CHECK(encode_text("ITS A WONDERFUL LIFE") == song);
  CHECK(encode_text("its a wonderful life") == song);
  CHECK(encode_text("").empty());
  CHECK(encode_text("A") == blocks({1}));
  CHECK(encode_text("Z") == blocks({26}));
  CHECK(decode_text(song) == "ITS A WONDERFUL LIFE");
  CHECK(format_blocks(encode_text("ITS A"), true) == "09 20 19 00 01");
  CHECK(format_blocks(blocks({108, 0, 7}), false) == "108 0 7");
  CHECK(parse_blocks(" 9 20\n19  0 ") == blocks({9, 20, 19, 0}));

  CHECK(code_of([] { encode_text("HI!"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { decode_text(blocks({27})); }) == ErrorCode::OutOfRange);
  CHECK_THROWS_AS(parse_blocks("1 x"), Error);
}

TEST_CASE("encryption of the song title") {
  auto base = shared(irretractable4());
  const Blocks expected = blocks(
      {108, 83, 82, 0, 100, 0, 94, 102, 101, 99, 112, 81, 109, 96, 107, 0, 107, 108, 109, 112});
  for (bool mat : {false, true}) {
    const LazyKey key = mat ? LazyKey::materialized(base, 46, 2) : LazyKey::lazy(base, 46, 2);
    const Blocks c = encrypt(song, key);
    CHECK(c == expected);
    CHECK(decrypt(c, key) == song);
    CHECK(encrypt(decrypt(song, key), key) == song);
  }

  const LazyKey key = LazyKey::lazy(base, 46, 2);
  CHECK(encrypt(blocks({0, 0}), key) == blocks({0, 0}));
  CHECK(code_of([&] { encrypt(blocks({257}), key); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { decrypt(blocks({-1}), key); }) == ErrorCode::OutOfRange);
}

TEST_CASE("signature of the song title") {
  auto base = shared(irretractable4());
  const LazyKey alice = LazyKey::lazy(base, 46, 2);
  const LazyKey bob = LazyKey::lazy(base, 3, 2);
  const SignedMessage s = sign(song, bob, alice);
  CHECK(s.intermediate == blocks({247, 208, 205, 0, 255, 0, 193, 249, 250, 256, 243, 206, 242,
                                  195, 248, 0, 248, 247, 242, 243}));
  CHECK(s.transmitted ==
        blocks({62, 39, 40, 0, 54, 0, 36, 60, 57, 55, 50, 37, 49, 34, 63, 0, 63, 62, 49, 50}));
  CHECK(open_signature(s.transmitted, alice, bob) == song);
}

TEST_CASE("property: ciphers are blockwise bijections") {
  auto base = shared(irretractable4());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned k = 1 + trial % 4;
    const BigInt size = pumped_size(4, k);
    const LazyKey key = LazyKey::lazy(base, 1 + BigInt(rng() % 1000) % size, k);
    Blocks m;
    for (int b = 0; b < 30; ++b) m.push_back(BigInt(rng() % 50) % (size + 1));
    const Blocks c = encrypt(m, key);
    CHECK(decrypt(c, key) == m);
    CHECK(encrypt(decrypt(m, key), key) == m);
    // equal plaintext blocks give equal ciphertext blocks and vice versa
    std::map<BigInt, BigInt> forward, backward;
    for (std::size_t b = 0; b < m.size(); ++b) {
      CHECK(forward.emplace(m[b], c[b]).first->second == c[b]);
      CHECK(backward.emplace(c[b], m[b]).first->second == m[b]);
    }

    const LazyKey other = LazyKey::lazy(base, 1 + BigInt(rng() % 1000) % size, k);
    CHECK(open_signature(sign(m, other, key).transmitted, key, other) == m);
  }
}

TEST_CASE("key exchange of the worked example") {
  auto base = shared(irretractable4());
  const Solution& e = *base;
  const KeyExchange kx = key_exchange(base, 1, 2, 3, 14);
  CHECK(kx.bob_to_alice == 6);
  CHECK(kx.alice_to_bob == 1);
  CHECK(kx.bob_recovered == 14);
  CHECK(kx.alice_recovered == 3);
  CHECK(kx.bob_inner == 4);
  CHECK(kx.alice_inner == 10);
  CHECK(kx.keys_equal);
  CHECK(kx.exhaustive);
  CHECK(kx.points_compared == 16);

  const Permutation bob = compose(g_of(e, 4, 2), g_of(e, 1, 4));
  const Permutation alice = compose(g_of(e, 1, 3), g_of(e, 3, 2));
  CHECK(bob == alice);
  CHECK(kx.bob_key.materialize(100) == bob);
  CHECK(kx.alice_key.materialize(100) == alice);
  CHECK(format_perm(bob, PermStyle::CyclesCompact) ==
        "(1,16)(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)");

  const KeyExchange same = key_exchange(base, 1, 2, 5, 5);
  CHECK(same.keys_equal);
}

TEST_CASE("key exchange agrees for every small base") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const Solution& s : all_solutions(n)) {
      auto base = shared(s);
      const std::uint64_t size = n * n;
      for (std::uint64_t j = 1; j <= size; ++j) {
        for (std::uint64_t l = 1; l <= size; ++l) {
          if (n == 3 && rng() % 8 != 0) continue;
          const KeyExchange kx = key_exchange(base, 1, 1 + rng() % size, j, l);
          CHECK(kx.keys_equal);
          CHECK(kx.bob_recovered == l);
          CHECK(kx.alice_recovered == j);
          // the identity behind the protocol, checked by hand
          const Permutation gl = kx.bob_key.outer.materialize();
          const Permutation gj = kx.alice_key.outer.materialize();
          const BigInt bob_inner = inverse(gl)(static_cast<Point>(j));
          const BigInt alice_inner = inverse(gj)(static_cast<Point>(l));
          CHECK(kx.bob_inner == bob_inner);
          CHECK(kx.alice_inner == alice_inner);
        }
      }
    }
  }
}

TEST_CASE("key exchange on a large domain compares samples") {
  auto base = shared(irretractable4());
  KeyExchangeOptions options;
  options.max_points = 100;
  options.sample_points = 64;
  const KeyExchange kx = key_exchange(base, 2, 46, 3, 200, options);
  CHECK(kx.keys_equal);
  CHECK_FALSE(kx.exhaustive);
  CHECK(kx.points_compared == 64);

  const KeyExchange deep = key_exchange(base, 5, 7, BigInt("123456789"), 31, options);
  CHECK(deep.keys_equal);

  CHECK(code_of([&] { key_exchange(base, 2, 0, 3, 4); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { key_exchange(base, 2, 46, 257, 4); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { key_exchange(base, 2, 46, 3, 257); }) == ErrorCode::OutOfRange);
}
