#include "hypercert/sequence.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "hypercert/error.hpp"

namespace hypercert {

Sequence::Sequence(std::vector<Rational> terms, Index offset, std::string provenance)
    : terms_(std::move(terms)), offset_(offset), provenance_(std::move(provenance)) {
  if (offset_ < 0) throw ContractError("sequence offset must be nonnegative");
  int previous_sign = 0;
  bool seen_positive = false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const int s = sign(terms_[k]);
    const Index i = offset_ + static_cast<Index>(k);
    if (s != 0) {
      if (previous_sign != 0 && s != previous_sign && !first_sign_change_) first_sign_change_ = i;
      previous_sign = s;
      if (s > 0) seen_positive = true;
    } else if (seen_positive && !first_zero_after_positive_) {
      first_zero_after_positive_ = i;
    }
  }
}

const Rational& Sequence::at(Index i) const {
  if (!contains(i)) {
    throw RangeError("index " + std::to_string(i) + " outside sequence range [" +
                         std::to_string(offset_) + ", " + std::to_string(last_index()) + "] of " +
                         provenance_,
                     std::max(i, last_index()));
  }
  return terms_[static_cast<std::size_t>(i - offset_)];
}

void Sequence::require_range(Index lo, Index hi, std::string_view what) const {
  if (lo > hi || lo < offset_ || hi > last_index()) {
    throw RangeError(std::string(what) + " needs indices [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] but " + provenance_ + " covers [" +
                         std::to_string(offset_) + ", " + std::to_string(last_index()) + "]",
                     std::max(hi, last_index()));
  }
}

std::span<const Rational> Sequence::window(Index lo, Index hi) const {
  require_range(lo, hi, "window");
  return std::span<const Rational>(terms_).subspan(static_cast<std::size_t>(lo - offset_),
                                                   static_cast<std::size_t>(hi - lo + 1));
}

bool Sequence::all_integers() const {
  for (const auto& t : terms_) {
    if (!is_integer(t)) return false;
  }
  return true;
}

namespace {

void require_nonnegative(Index n_max, std::string_view what) {
  if (n_max < 0) throw ContractError(std::string(what) + ": n_max must be nonnegative");
}

std::vector<Rational> to_rationals(std::vector<Integer>&& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (auto& v : values) out.emplace_back(std::move(v));
  return out;
}

}  // namespace

Sequence partition_sequence(Index n_max) {
  require_nonnegative(n_max, "partition_sequence");
  const auto count = static_cast<std::size_t>(n_max) + 1;
  std::vector<Integer> p(count);
  p[0] = 1;
  for (std::size_t n = 1; n < count; ++n) {
    Integer sum;
    for (std::size_t k = 1;; ++k) {
      const std::size_t first = k * (3 * k - 1) / 2;
      if (first > n) break;
      const std::size_t second = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        sum += p[n - first];
        if (second <= n) sum += p[n - second];
      } else {
        sum -= p[n - first];
        if (second <= n) sum -= p[n - second];
      }
    }
    p[n] = std::move(sum);
  }
  return Sequence(to_rationals(std::move(p)), 0, "partition");
}

Integer sigma2(unsigned n) {
  if (n == 0) throw ContractError("sigma2 is defined for n >= 1");
  Integer s;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += Integer(d) * d;
    const unsigned e = n / d;
    if (e != d) s += Integer(e) * e;
  }
  return s;
}

Sequence plane_partition_sequence(Index n_max) {
  require_nonnegative(n_max, "plane_partition_sequence");
  const auto count = static_cast<std::size_t>(n_max) + 1;

  std::vector<Integer> sig(count);
  for (std::size_t d = 1; d < count; ++d) {
    const Integer sq = Integer(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    for (std::size_t m = d; m < count; m += d) sig[m] += sq;
  }

  std::vector<Integer> pp(count);
  pp[0] = 1;
  for (std::size_t n = 1; n < count; ++n) {
    Integer acc;
    for (std::size_t j = 1; j <= n; ++j) acc += sig[j] * pp[n - j];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n))) {
      throw IntegrityError("plane partition recurrence produced a non-integer at n=" +
                           std::to_string(n));
    }
    mpz_divexact_ui(pp[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return Sequence(to_rationals(std::move(pp)), 0, "planepartition");
}

std::string BuiltinSpec::to_string() const {
  if (params.empty()) return name;
  std::string s = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += hypercert::to_string(params[i]);
  }
  return s + ")";
}

BuiltinSpec parse_builtin(std::string_view text) {
  static const std::regex pattern(R"(^\s*([a-z_]+)\s*(?:\(\s*([^)]*)\))?\s*$)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw ContractError("malformed builtin sequence '" + std::string(text) + "'");
  }
  BuiltinSpec spec{m[1].str(), {}};
  if (m[2].matched) {
    std::stringstream params(m[2].str());
    std::string item;
    while (std::getline(params, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw ContractError("empty builtin parameter");
      spec.params.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
  }
  return spec;
}

Sequence builtin_sequence(const BuiltinSpec& spec, Index n_max) {
  require_nonnegative(n_max, "builtin_sequence");
  const auto count = static_cast<std::size_t>(n_max) + 1;
  auto expect_params = [&](std::size_t n) {
    if (spec.params.size() != n) {
      throw ContractError("builtin '" + spec.name + "' takes " + std::to_string(n) +
                          " parameter(s), got " + std::to_string(spec.params.size()));
    }
  };

  std::vector<Rational> terms(count);
  if (spec.name == "constant") {
    expect_params(0);
    for (auto& t : terms) t = 1;
  } else if (spec.name == "signflip") {
    expect_params(0);
    for (std::size_t k = 0; k < count; ++k) terms[k] = (k % 2 == 0) ? 1 : -1;
  } else if (spec.name == "binomial_row") {
    expect_params(1);
    const Rational& m = spec.params[0];
    if (!is_integer(m) || m < 0 || m > 100000) {
      throw ContractError("binomial_row(m) needs an integer 0 <= m <= 100000");
    }
    const auto row = binomial_row(static_cast<unsigned>(m.get_num().get_ui()));
    for (std::size_t k = 0; k < count; ++k) terms[k] = k < row.size() ? Rational(row[k]) : 0;
  } else if (spec.name == "geometric") {
    expect_params(1);
    Rational power = 1;
    for (auto& t : terms) {
      t = power;
      power *= spec.params[0];
    }
  } else {
    throw ContractError("unknown builtin sequence '" + spec.name + "'");
  }
  return Sequence(std::move(terms), 0, "builtin:" + spec.to_string());
}

namespace {

std::optional<Index> parse_index(std::string_view s) {
  Index v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || v < 0) return std::nullopt;
  return v;
}

}  // namespace

Sequence parse_sequence(std::istream& in, std::string provenance) {
  std::vector<Rational> terms;
  Index offset = 0;
  bool have_data = false;
  Index previous = 0;
  std::string line;
  std::size_t line_no = 0;
  static const std::regex offset_header(R"(^#\s*offset\s+(\S+)\s*$)");

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::smatch m;
      if (std::regex_match(line, m, offset_header)) {
        if (have_data) throw ParseError("offset header after data lines", line_no);
        const auto v = parse_index(m[1].str());
        if (!v) throw ParseError("bad offset '" + m[1].str() + "'", line_no);
        offset = *v;
      }
      continue;
    }
    const auto space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
      throw ParseError("expected '<index> <value>'", line_no);
    }
    const auto idx = parse_index(std::string_view(line).substr(0, space));
    if (!idx) throw ParseError("bad index '" + line.substr(0, space) + "'", line_no);
    Rational value;
    try {
      value = parse_rational(std::string_view(line).substr(space + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }

    const Index expected = have_data ? previous + 1 : offset;
    if (have_data && *idx == previous) {
      throw ParseError("duplicate index " + std::to_string(*idx), line_no);
    }
    if (*idx != expected) {
      throw ParseError("non-contiguous index " + std::to_string(*idx) + ", expected " +
                           std::to_string(expected),
                       line_no);
    }
    terms.push_back(std::move(value));
    previous = *idx;
    have_data = true;
  }
  return Sequence(std::move(terms), offset, std::move(provenance));
}

Sequence load_sequence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open sequence file " + path.string());
  return parse_sequence(in, "file:" + path.string());
}

void write_sequence(std::ostream& out, const Sequence& seq) {
  out << "# sequence " << seq.provenance() << "\n";
  out << "# offset " << seq.offset() << "\n";
  Index i = seq.offset();
  for (const auto& t : seq.terms()) out << i++ << ' ' << to_string(t) << '\n';
}

std::string format_sequence(const Sequence& seq) {
  std::ostringstream out;
  write_sequence(out, seq);
  return out.str();
}

void save_sequence(const std::filesystem::path& path, const Sequence& seq) {
  static std::atomic<unsigned long> counter{0};
  auto tmp = path;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
         "." + std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ContractError("cannot write " + tmp.string());
    write_sequence(out, seq);
    out.flush();
    if (!out) throw ContractError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ContractError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

SequenceCache::SequenceCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::filesystem::path SequenceCache::entry_path(std::string_view key, Index n_max) const {
  // FNV-1a keeps distinct keys apart after sanitizing.
  std::uint64_t h = 1469598103934665603ull;
  std::string safe;
  for (char c : key) {
    h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
    safe.push_back(ok ? c : '_');
  }
  std::ostringstream name;
  name << safe << '-' << std::hex << h << std::dec << '-' << n_max << ".seq";
  return directory_ / name.str();
}

std::optional<Sequence> SequenceCache::lookup(std::string_view key, Index n_max) const {
  const auto path = entry_path(key, n_max);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    auto seq = parse_sequence(in, std::string(key));
    if (seq.offset() != 0 || seq.last_index() != n_max) return std::nullopt;
    return seq;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

void SequenceCache::store(std::string_view key, Index n_max, const Sequence& seq) {
  std::lock_guard lock(write_mutex_);
  save_sequence(entry_path(key, n_max), seq);
}

Sequence SequenceCache::get_or_compute(std::string_view key, Index n_max,
                                       const std::function<Sequence(Index)>& generate) {
  if (auto hit = lookup(key, n_max)) return *std::move(hit);
  Sequence seq = generate(n_max);
  store(key, n_max, seq);
  return seq;
}

}  // namespace hypercert
