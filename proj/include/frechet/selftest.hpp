#ifndef FRECHET_SELFTEST_HPP
#define FRECHET_SELFTEST_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace frechet {

struct SelftestConfig {
  std::uint64_t seed = 1;
  std::size_t iterations = 1000;
  /// Where to serialize a failing (pi, sigma, delta) reproduction case.
  std::filesystem::path repro_dir = ".";
};

struct SelftestReport {
  std::size_t decider_checks = 0; ///< oracle-equivalence decisions compared
  std::size_t filter_checks = 0;  ///< filter verdicts checked for soundness
  std::size_t cell_checks = 0;    ///< cell propagation subset checks
  std::size_t index_checks = 0;   ///< index queries compared to linear scans
  std::vector<std::string> failures;
  std::optional<std::filesystem::path> repro_path;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

/**
 * Randomized property suite over the deciders, filters, free-space
 * primitives and the spatial index, all checked against brute-force or
 * reference computations. Deterministic for a fixed seed. On the first
 * decider counterexample the offending curve pair and threshold are written
 * under repro_dir for replay.
 */
SelftestReport run_selftest(const SelftestConfig &config);

} // namespace frechet

#endif
