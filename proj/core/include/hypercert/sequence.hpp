#pragma once

// Integer sequences: generation, ingestion, persistence and caching.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypercert/numeric.hpp"

namespace hypercert {

/// Exact terms gamma_offset .. gamma_{offset+size-1}.
///
/// Reads outside the stored range throw RangeError; nothing is ever padded
/// with zeros implicitly. Immutable after construction and safe to share.
class Sequence {
 public:
  Sequence() = default;
  Sequence(std::vector<Rational> terms, Index offset, std::string provenance);

  Index offset() const { return offset_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// offset - 1 for an empty sequence.
  Index last_index() const { return offset_ + static_cast<Index>(terms_.size()) - 1; }

  bool contains(Index i) const { return i >= offset_ && i <= last_index(); }
  bool contains_range(Index lo, Index hi) const { return lo <= hi && contains(lo) && contains(hi); }

  const Rational& at(Index i) const;
  /// Throws RangeError naming `what` unless [lo, hi] is stored.
  void require_range(Index lo, Index hi, std::string_view what) const;

  std::span<const Rational> terms() const { return terms_; }
  /// Terms lo..hi inclusive; range-checked.
  std::span<const Rational> window(Index lo, Index hi) const;

  const std::string& provenance() const { return provenance_; }

  /// First index whose sign is opposite to the previous nonzero term.
  std::optional<Index> first_sign_change() const { return first_sign_change_; }
  /// First zero term occurring after some positive term.
  std::optional<Index> first_zero_after_positive() const { return first_zero_after_positive_; }

  bool all_integers() const;

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.offset_ == b.offset_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<Rational> terms_;
  Index offset_ = 0;
  std::string provenance_;
  std::optional<Index> first_sign_change_;
  std::optional<Index> first_zero_after_positive_;
};

/// p(0..n_max) by Euler's pentagonal-number recurrence.
Sequence partition_sequence(Index n_max);

/// Sum of the squares of the divisors of n (n >= 1).
Integer sigma2(unsigned n);

/// pp(0..n_max), plane partitions, via n*pp(n) = sum_{j=1}^{n} sigma2(j) pp(n-j).
Sequence plane_partition_sequence(Index n_max);

/// Parsed form of "constant", "signflip", "binomial_row(m)", "geometric(r)".
struct BuiltinSpec {
  std::string name;
  std::vector<Rational> params;

  std::string to_string() const;
};

BuiltinSpec parse_builtin(std::string_view text);

/// Deterministic fixture sequences on 0..n_max:
///   constant          1, 1, 1, ...
///   signflip          1, -1, 1, ...
///   binomial_row(m)   C(m,k) for k <= m, then zeros
///   geometric(r)      r^k
Sequence builtin_sequence(const BuiltinSpec& spec, Index n_max);

// Sequence file format:
//   lines starting with '#' are comments; "# offset <k>" sets the first index
//   (default 0, must precede data); data lines are "<index> <value>" with a
//   single space, value an integer or a/b; indices contiguous from the offset.

Sequence parse_sequence(std::istream& in, std::string provenance);
Sequence load_sequence(const std::filesystem::path& path);

void write_sequence(std::ostream& out, const Sequence& seq);
std::string format_sequence(const Sequence& seq);

/// Writes to a temporary file in the same directory and renames it over `path`,
/// so readers never observe a partially written file.
void save_sequence(const std::filesystem::path& path, const Sequence& seq);

/// On-disk sequence cache keyed by (provenance key, n_max), stored in the
/// sequence file format. Writes are serialized; reads take no lock.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path entry_path(std::string_view key, Index n_max) const;

  std::optional<Sequence> lookup(std::string_view key, Index n_max) const;
  void store(std::string_view key, Index n_max, const Sequence& seq);

  Sequence get_or_compute(std::string_view key, Index n_max,
                          const std::function<Sequence(Index)>& generate);

 private:
  std::filesystem::path directory_;
  std::mutex write_mutex_;
};

}  // namespace hypercert
