// crand: run any generator and print or stream its output, plus ACF, lag
// and throughput diagnostics.
//
// Exit codes: 0 ok, 1 usage error, 2 runtime failure.

#include <algorithm>
#include <bit>
#include <cerrno>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "crand/crand.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliRequest {
  std::string gen = "xorshift128plus";
  std::vector<std::string> seed;
  std::uint64_t count = 10;
  std::string out_type = "int";
  std::string format = "text";
  std::string out_path;
  std::string input_path;
  std::uint64_t lag = 1;
  std::uint64_t max_lag = 50;
  std::uint64_t reps = 7;
  std::uint64_t loops = 10000;
  std::vector<std::string> bench_gens;
};

std::optional<std::uint64_t> parse_word(std::string_view s) {
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

crand::GeneratorKind parse_kind(const std::string& name) {
  if (auto k = crand::kind_from_name(name)) return *k;
  std::string valid;
  for (auto k : crand::all_kinds) {
    if (!valid.empty()) valid += ", ";
    valid += crand::name(k);
  }
  throw UsageError("unknown generator '" + name + "' (valid: " + valid + ")");
}

std::uint64_t entropy_word() {
  if (const char* env = std::getenv("CRAND_SEED")) {
    if (auto v = parse_word(env)) return *v;
    throw UsageError(std::string("CRAND_SEED is not an unsigned integer: ") + env);
  }
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) ^ rd();
}

std::string join_words(const std::vector<std::uint64_t>& words) {
  std::string s;
  for (auto w : words) {
    if (!s.empty()) s += ',';
    s += std::to_string(w);
  }
  return s;
}

// Builds the start state from --seed, or auto-seeds and echoes the words to
// stderr so the run can be reproduced.
crand::GeneratorState make_state(crand::GeneratorKind kind, const std::vector<std::string>& seed) {
  std::vector<std::uint64_t> words;
  if (seed.empty()) {
    words = crand::auto_seed_words(kind, entropy_word());
    std::fprintf(stderr, "crand: seed %s\n", join_words(words).c_str());
  } else {
    for (const auto& s : seed) {
      auto w = parse_word(s);
      if (!w) throw UsageError("seed word is not an unsigned integer: " + s);
      words.push_back(*w);
    }
  }
  auto state = crand::new_state(kind, words);
  if (!state) {
    std::string msg(crand::message(state.error()));
    if (state.error() == crand::Errc::wrong_seed_count) {
      msg += ": " + std::string(crand::name(kind)) + " takes " +
             std::to_string(crand::required_seed_words(kind)) + " word(s)";
    }
    throw UsageError(msg);
  }
  return std::move(state).value();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") {
      file_ = stdout;
    } else {
      file_ = std::fopen(path.c_str(), "wb");
      if (file_ == nullptr) {
        throw RuntimeError("cannot open " + path + ": " + std::strerror(errno));
      }
      owned_ = true;
    }
  }
  Output(const Output&) = delete;
  Output& operator=(const Output&) = delete;
  ~Output() {
    if (owned_) std::fclose(file_);
  }

  void write(const void* data, std::size_t bytes) {
    if (bytes != 0 && std::fwrite(data, 1, bytes, file_) != bytes) {
      throw RuntimeError("write failed");
    }
  }
  void write(std::string_view s) { write(s.data(), s.size()); }

  void finish() {
    if (std::fflush(file_) != 0) throw RuntimeError("write failed");
  }

 private:
  std::FILE* file_ = nullptr;
  bool owned_ = false;
};

template <typename T>
void append_number(std::string& line, T v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  line.append(buf, res.ptr);
}

template <typename T>
T to_little_endian(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    std::uint64_t swapped = 0;
    for (int i = 0; i < 8; ++i) swapped |= ((bits >> (8 * i)) & 0xFFu) << (56 - 8 * i);
    return std::bit_cast<T>(swapped);
  }
  return v;
}

int run_generate(const CliRequest& req) {
  const auto kind = parse_kind(req.gen);
  const bool as_float = req.out_type == "float";
  const bool binary = req.format == "binary";
  auto state = make_state(kind, req.seed);
  Output out(req.out_path);

  constexpr std::size_t chunk = 1 << 14;
  std::vector<std::uint64_t> words(chunk);
  std::vector<double> units(chunk);
  std::string text;
  for (std::uint64_t done = 0; done < req.count;) {
    const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(chunk, req.count - done));
    text.clear();
    if (as_float) {
      state.fill_unit_into(std::span(units.data(), n));
      if (binary) {
        for (std::size_t i = 0; i < n; ++i) units[i] = to_little_endian(units[i]);
        out.write(units.data(), n * sizeof(double));
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          append_number(text, units[i]);
          text += '\n';
        }
      }
    } else {
      state.fill_into(std::span(words.data(), n));
      if (binary) {
        for (std::size_t i = 0; i < n; ++i) words[i] = to_little_endian(words[i]);
        out.write(words.data(), n * sizeof(std::uint64_t));
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          append_number(text, words[i]);
          text += '\n';
        }
      }
    }
    out.write(text);
    done += n;
  }
  out.finish();
  return kExitOk;
}

std::vector<double> read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeError("cannot open " + path);
  std::vector<double> series;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view s(line);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    if (s.empty()) continue;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw RuntimeError("not a number in " + path + ": " + line);
    }
    series.push_back(v);
  }
  return series;
}

// Either the --input series or `count` normalized draws.
std::vector<double> analysis_series(const CliRequest& req) {
  if (!req.input_path.empty()) return read_series(req.input_path);
  const auto kind = parse_kind(req.gen);
  auto state = make_state(kind, req.seed);
  std::vector<double> series(static_cast<std::size_t>(req.count));
  state.fill_unit_into(series);
  return series;
}

int run_acf(const CliRequest& req) {
  if (req.input_path.empty() && req.count < req.max_lag + 2) {
    throw UsageError("acf needs --count >= --max-lag + 2");
  }
  const auto series = analysis_series(req);
  auto r = crand::acf(series, static_cast<std::size_t>(req.max_lag));
  if (!r) {
    if (r.error() == crand::Errc::too_short) {
      throw UsageError("acf needs at least --max-lag + 2 values");
    }
    throw RuntimeError(std::string(crand::message(r.error())));
  }
  Output out(req.out_path);
  std::string text = "lag,acf\n";
  for (std::size_t k = 1; k <= r->max_lag; ++k) {
    append_number(text, k);
    text += ',';
    append_number(text, r->values[k - 1]);
    text += '\n';
  }
  out.write(text);
  out.finish();
  return kExitOk;
}

int run_lag(const CliRequest& req) {
  if (req.input_path.empty() && req.lag >= req.count) {
    throw UsageError("lag needs --lag < --count");
  }
  const auto series = analysis_series(req);
  auto pairs = crand::lag_pairs(series, static_cast<std::size_t>(req.lag));
  if (!pairs) throw UsageError("lag needs --lag < number of values");
  Output out(req.out_path);
  std::string text;
  for (const auto& [x, y] : *pairs) {
    append_number(text, x);
    text += ',';
    append_number(text, y);
    text += '\n';
  }
  out.write(text);
  out.finish();
  return kExitOk;
}

int run_bench(const CliRequest& req) {
  if (req.reps < 2) throw UsageError("bench needs --reps >= 2");
  std::vector<crand::GeneratorKind> kinds;
  for (const auto& g : req.bench_gens) kinds.push_back(parse_kind(g));
  if (kinds.empty()) kinds.push_back(crand::GeneratorKind::xorshift128plus);
  if (std::find(kinds.begin(), kinds.end(), crand::GeneratorKind::mt19937_64) == kinds.end()) {
    kinds.push_back(crand::GeneratorKind::mt19937_64);
  }

  std::vector<crand::BenchReport> reports;
  for (auto kind : kinds) {
    auto r = crand::bench_throughput(kind, static_cast<std::size_t>(req.count),
                                     static_cast<std::size_t>(req.reps),
                                     static_cast<std::size_t>(req.loops));
    if (!r) throw RuntimeError(std::string(crand::message(r.error())));
    if (!r->checksum_stable) throw RuntimeError("checksum differs between runs");
    reports.push_back(*r);
  }
  const double baseline = reports.back().mean_us;

  Output out(req.out_path);
  std::string text = "kind,n,reps,loops,mean_us,stddev_us,ratio_to_mt19937_64,checksum\n";
  for (const auto& r : reports) {
    text += crand::name(r.kind);
    text += ',';
    append_number(text, r.n);
    text += ',';
    append_number(text, r.reps);
    text += ',';
    append_number(text, r.loops);
    text += ',';
    append_number(text, r.mean_us);
    text += ',';
    append_number(text, r.stddev_us);
    text += ',';
    append_number(text, r.mean_us / baseline);
    text += ',';
    append_number(text, r.checksum);
    text += '\n';
  }
  out.write(text);
  out.finish();
  return kExitOk;
}

void add_seed_options(CLI::App* cmd, CliRequest& req) {
  cmd->add_option("--seed", req.seed, "Seed words (decimal or 0x hex), comma separated")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudorandom generators: streams, ACF, lag pairs, throughput"};
  app.require_subcommand(1);
  CliRequest req;

  const std::vector<std::string> kind_names = [] {
    std::vector<std::string> v;
    for (auto k : crand::all_kinds) v.emplace_back(crand::name(k));
    return v;
  }();

  auto* gen = app.add_subcommand("generate", "Print or stream raw outputs or unit samples");
  gen->add_option("--gen", req.gen, "Generator name")->capture_default_str();
  add_seed_options(gen, req);
  gen->add_option("--count,-n", req.count, "Number of values")->capture_default_str();
  gen->add_option("--type", req.out_type, "int or float")
      ->check(CLI::IsMember({"int", "float"}))
      ->capture_default_str();
  gen->add_option("--format", req.format, "text or binary (little-endian, unframed)")
      ->check(CLI::IsMember({"text", "binary"}))
      ->capture_default_str();
  gen->add_option("--out,-o", req.out_path, "Output file (default stdout)");

  auto* acf = app.add_subcommand("acf", "Sample autocorrelation of unit samples as CSV");
  acf->add_option("--gen", req.gen, "Generator name")->capture_default_str();
  add_seed_options(acf, req);
  acf->add_option("--count,-n", req.count, "Number of draws");
  acf->add_option("--max-lag", req.max_lag, "Largest lag")->capture_default_str();
  acf->add_option("--input", req.input_path, "Analyse a series file (one value per line)");
  acf->add_option("--out,-o", req.out_path, "Output file (default stdout)");

  auto* lag = app.add_subcommand("lag", "Lag-plot pairs (x_i, x_{i+k}) as CSV");
  lag->add_option("--gen", req.gen, "Generator name")->capture_default_str();
  add_seed_options(lag, req);
  lag->add_option("--count,-n", req.count, "Number of draws");
  lag->add_option("--lag,-k", req.lag, "Lag k")->capture_default_str();
  lag->add_option("--input", req.input_path, "Analyse a series file (one value per line)");
  lag->add_option("--out,-o", req.out_path, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Time fill(count); mt19937_64 is always included");
  bench->add_option("--gen", req.bench_gens, "Generator name(s)")->delimiter(',');
  bench->add_option("--count,-n", req.count, "Values per fill");
  bench->add_option("--reps", req.reps, "Timed runs")->capture_default_str();
  bench->add_option("--loops", req.loops, "Fills per run")->capture_default_str();
  bench->add_option("--out,-o", req.out_path, "Output file (default stdout)");

  // Subcommand-specific defaults for --count.
  acf->preparse_callback([&](std::size_t) { req.count = 100000; });
  lag->preparse_callback([&](std::size_t) { req.count = 1000; });
  bench->preparse_callback([&](std::size_t) { req.count = 10000; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_generate(req);
    if (acf->parsed()) return run_acf(req);
    if (lag->parsed()) return run_lag(req);
    return run_bench(req);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "crand: %s\n", e.what());
    return kExitUsage;
  } catch (const RuntimeError& e) {
    std::fprintf(stderr, "crand: %s\n", e.what());
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "crand: %s\n", e.what());
    return kExitRuntime;
  }
}
