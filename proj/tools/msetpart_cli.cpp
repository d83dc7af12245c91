// Command-line frontend for the multiset set-partition engine.
//
// Subcommands: seq, poly, operator, multiset, brute, sample.
// Exit status: 0 on success, 1 on internal integrality failure, 2 on
// invalid arguments (including guard and cap violations).

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <msetpart/msetpart.hpp>

namespace {

using namespace msetpart;

std::string quoted_join(const std::vector<Integer>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ", ";
    out += "\"" + v.str() + "\"";
  }
  return out;
}

std::string profile_json(const std::vector<unsigned>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(m[i]);
  }
  return out + "]";
}

MultiplicityProfile parse_profile(const std::vector<unsigned>& m, bool require_positive) {
  if (m.empty()) throw std::invalid_argument("profile must have at least one entry");
  if (require_positive) {
    bool any = false;
    for (unsigned v : m) any = any || v > 0;
    if (!any) throw std::invalid_argument("profile must have at least one positive entry");
  }
  return MultiplicityProfile{m};
}

void run_seq(unsigned r, unsigned n, bool distinct, const std::string& format) {
  if (format == "bfile") {
    // streamed: each term is printed and forgotten along with its polynomial
    std::vector<int> mask(r, 0);
    mask[0] = 1;
    sequence_identical_stream(r, n, [&](unsigned step, const SparsePolynomial& p) {
      const Integer v =
          distinct ? to_integer(p.evaluate_with_mask(mask)) : to_integer(p.evaluate_at_ones());
      std::cout << step << " " << v.str() << "\n";
    });
    return;
  }
  const auto values = distinct ? sequence_distinct_sets(r, n) : sequence_identical(r, n);
  if (format == "json") {
    std::cout << "{\"r\": " << r << ", \"n\": " << n
              << ", \"distinct\": " << (distinct ? "true" : "false") << ", \"values\": ["
              << quoted_join(values) << "]}\n";
  } else {
    std::cout << sequence_to_text(values) << "\n";
  }
}

void run_poly(unsigned r, unsigned n, const std::string& format) {
  const SparsePolynomial p = weight_polynomial_identical(r, n);
  if (format == "json") {
    std::cout << polynomial_to_json(p) << "\n";
  } else {
    std::cout << polynomial_to_text(p) << "\n";
  }
}

void run_operator(unsigned r, bool force, const std::string& format) {
  constexpr unsigned kGuard = 10;
  if (r > kGuard && !force) {
    throw std::invalid_argument("r = " + std::to_string(r) + " exceeds the default guard of " +
                                std::to_string(kGuard) + "; pass --force to build it anyway");
  }
  const EvolutionOperator op = build_operator(r);
  if (format == "json") {
    std::cout << operator_to_json(op) << "\n";
  } else if (format == "latex") {
    std::cout << operator_to_latex(op) << "\n";
  } else {
    std::cout << operator_to_text(op) << "\n";
  }
}

void run_multiset(const std::vector<unsigned>& m, bool with_poly, const std::string& format) {
  const MultiplicityProfile profile = parse_profile(m, true);
  const SparsePolynomial p = weight_polynomial_multiset(profile);
  const Integer count = to_integer(p.evaluate_at_ones());
  if (format == "json") {
    std::cout << "{\"profile\": " << profile_json(m) << ", \"count\": \"" << count.str() << "\"";
    if (with_poly) std::cout << ", \"poly\": " << polynomial_to_json(p);
    std::cout << "}\n";
  } else {
    std::cout << count.str() << "\n";
    if (with_poly) std::cout << polynomial_to_text(p) << "\n";
  }
}

void run_brute(const std::vector<unsigned>& m, bool list, std::size_t max_elements,
               const std::string& format) {
  const MultiplicityProfile profile = parse_profile(m, false);
  const MultisetSpec spec = MultisetSpec::from_profile(profile);
  if (spec.element_total() > max_elements) {
    throw std::invalid_argument("multiset has " + std::to_string(spec.element_total()) +
                                " elements, above the cap of " + std::to_string(max_elements) +
                                "; raise it with --max-elements");
  }
  const auto arrangements = enumerate_arrangements(spec, max_elements);
  if (format == "json") {
    std::cout << "{\"count\": " << arrangements.size();
    if (list) {
      std::cout << ", \"arrangements\": [";
      for (std::size_t i = 0; i < arrangements.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << "\"" << arrangement_to_text(arrangements[i]) << "\"";
      }
      std::cout << "]";
    }
    std::cout << "}\n";
  } else if (list) {
    for (const auto& arr : arrangements) std::cout << arrangement_to_text(arr) << "\n";
  } else {
    std::cout << arrangements.size() << "\n";
  }
}

void run_sample(unsigned n, std::optional<unsigned> k, unsigned count, std::uint64_t seed,
                const std::string& format) {
  if (k && (*k == 0 || *k > n)) {
    throw std::invalid_argument("k must satisfy 1 <= k <= n");
  }
  const StirlingTable table = build_stirling(n);
  RandomSource rng(seed);
  std::vector<std::string> lines;
  lines.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    const SetPartition sp =
        k ? sample_given_k(table, n, *k, rng) : sample_uniform(table, n, rng);
    lines.push_back(set_partition_to_text(sp));
  }
  if (format == "json") {
    std::cout << "{\"n\": " << n << ", \"count\": " << count << ", \"seed\": " << seed
              << ", \"partitions\": [";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << "\"" << lines[i] << "\"";
    }
    std::cout << "]}\n";
  } else {
    for (const auto& line : lines) std::cout << line << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting, enumeration and sampling of multiset set-partitions"};
  app.require_subcommand(1);
  app.fallthrough();

  bool show_time = false;
  app.add_flag("--time", show_time, "print wall-clock duration to stderr");

  unsigned r = 1;
  unsigned n = 1;
  bool distinct = false;
  bool force = false;
  bool with_poly = false;
  bool list = false;
  std::vector<unsigned> profile;
  std::size_t max_elements = kDefaultOracleCap;
  unsigned sample_n = 1;
  unsigned sample_count = 1;
  std::uint64_t seed = 0;
  std::optional<unsigned> sample_k;

  auto* seq = app.add_subcommand("seq", "counting sequence for r identical copies of 1..n");
  seq->add_option("--r", r, "number of identical copies of each element")
      ->required()
      ->check(CLI::PositiveNumber);
  seq->add_option("--n", n, "number of terms")->required()->check(CLI::PositiveNumber);
  seq->add_flag("--distinct", distinct, "count only arrangements with pairwise distinct sets");
  std::string seq_format = "text";
  seq->add_option("--format", seq_format, "output format")
      ->check(CLI::IsMember({"text", "json", "bfile"}));

  auto* poly = app.add_subcommand("poly", "weight polynomial for r identical copies of 1..n");
  poly->add_option("--r", r, "number of identical copies of each element")
      ->required()
      ->check(CLI::PositiveNumber);
  poly->add_option("--n", n, "index of the polynomial")->required()->check(CLI::PositiveNumber);
  std::string poly_format = "text";
  poly->add_option("--format", poly_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* op = app.add_subcommand("operator", "the evolution operator for multiplicity r");
  op->add_option("--r", r, "multiplicity class")->required()->check(CLI::PositiveNumber);
  op->add_flag("--force", force, "build operators beyond the r <= 10 guard");
  std::string op_format = "text";
  op->add_option("--format", op_format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* multiset = app.add_subcommand("multiset", "count arrangements of an arbitrary multiset");
  multiset->add_option("--m", profile, "multiplicity profile m1,m2,... (mi elements appear i times)")
      ->required()
      ->delimiter(',');
  multiset->add_flag("--poly", with_poly, "also print the weight polynomial");
  std::string multiset_format = "text";
  multiset->add_option("--format", multiset_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* brute = app.add_subcommand("brute", "brute-force enumeration of arrangements");
  brute->add_option("--m", profile, "multiplicity profile m1,m2,...")->required()->delimiter(',');
  brute->add_flag("--list", list, "print one canonical arrangement per line instead of the count");
  brute->add_option("--max-elements", max_elements, "safety cap on the multiset size");
  std::string brute_format = "text";
  brute->add_option("--format", brute_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sample = app.add_subcommand("sample", "uniform random set partitions of {1..n}");
  sample->add_option("--n", sample_n, "ground-set size")->required()->check(CLI::PositiveNumber);
  sample->add_option("--k", sample_k, "exact number of blocks (uniform over all k if omitted)");
  sample->add_option("--count", sample_count, "number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "random seed");
  std::string sample_format = "text";
  sample->add_option("--format", sample_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (seq->parsed()) {
      run_seq(r, n, distinct, seq_format);
    } else if (poly->parsed()) {
      run_poly(r, n, poly_format);
    } else if (op->parsed()) {
      run_operator(r, force, op_format);
    } else if (multiset->parsed()) {
      run_multiset(profile, with_poly, multiset_format);
    } else if (brute->parsed()) {
      run_brute(profile, list, max_elements, brute_format);
    } else if (sample->parsed()) {
      run_sample(sample_n, sample_k, sample_count, seed, sample_format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = 1;
  }
  if (show_time) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    std::cerr << "time: " << std::chrono::duration<double, std::milli>(elapsed).count()
              << " ms\n";
  }
  return status;
}
