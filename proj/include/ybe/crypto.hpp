#pragma once

#include "ybe/bigint.hpp"
#include "ybe/lazy_tree.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ybe {

/// Message blocks. Block 0 is the blank in text mode and is fixed by every key.
using Blocks = std::vector<BigInt>;

/// One letter per block: blank = 0, A = 1, ..., Z = 26. Lowercase is folded.
/// Throws InvalidArgument on any other character.
Blocks encode_text(std::string_view text);

/// Throws OutOfRange for blocks above 26.
std::string decode_text(const Blocks& blocks);

/// Whitespace-separated decimal integers.
Blocks parse_blocks(std::string_view text);

/// Space-separated; zero-padded to two digits in text mode.
std::string format_blocks(const Blocks& blocks, bool text_mode);

/// Blockwise g^_i, with 0 -> 0. Throws OutOfRange for blocks above n^(2^k).
Blocks encrypt(const Blocks& blocks, const LazyKey& key);
Blocks decrypt(const Blocks& blocks, const LazyKey& key);

struct SignedMessage {
  Blocks intermediate;  // S = g^_j^{-1}(M)
  Blocks transmitted;   // g^_i(S)
};

/// The sender holds j, the receiver i.
SignedMessage sign(const Blocks& message, const LazyKey& sender, const LazyKey& receiver);

/// g^_j(g^_i^{-1}(C)).
Blocks open_signature(const Blocks& transmitted, const LazyKey& receiver, const LazyKey& sender);

/// outer o inner, evaluated point by point.
struct SharedKey {
  LazyKey outer;
  LazyKey inner;

  BigInt eval(const BigInt& m) const { return outer.eval(inner.eval(m)); }
  Permutation materialize(std::uint64_t max_points) const;
};

struct KeyExchangeOptions {
  std::uint64_t max_points = 1'000'000;  // materialize keys up to this size
  std::size_t sample_points = 100;        // pointwise comparison otherwise
  std::uint64_t seed = 20240101;
  TreeLimits limits{};
};

struct KeyExchange {
  BigInt i, j, l;
  BigInt bob_to_alice;   // g^_i(j)
  BigInt alice_to_bob;   // g^_i(l)
  BigInt bob_recovered;  // l, via g^_i^{-1}
  BigInt alice_recovered;  // j
  BigInt bob_inner;      // g^_l^{-1}(j)
  BigInt alice_inner;    // g^_j^{-1}(l)
  SharedKey bob_key;     // g^_l o g^_{bob_inner}
  SharedKey alice_key;   // g^_j o g^_{alice_inner}
  bool keys_equal = false;
  bool exhaustive = false;  // compared on every point, else on samples
  std::size_t points_compared = 0;
};

/// Throws OutOfRange unless i, j, l all lie in {1..n^(2^k)}.
KeyExchange key_exchange(std::shared_ptr<const Solution> base, unsigned k, const BigInt& i,
                         const BigInt& j, const BigInt& l, const KeyExchangeOptions& options = {});

}  // namespace ybe
