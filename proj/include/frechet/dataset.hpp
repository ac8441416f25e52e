#ifndef FRECHET_DATASET_HPP
#define FRECHET_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/// Ingestion failure; the message names the offending file and line.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * An immutable set of curves with unique string ids. Positions are dense
 * indices in load order; ids map back to positions for lookups.
 */
struct Database {
  std::vector<Curve> curves;
  std::unordered_map<std::string, std::size_t> position_of;
  std::string source; // manifest path or synthetic description

  std::size_t size() const { return curves.size(); }
  const Curve &operator[](std::size_t pos) const { return curves[pos]; }

  /// Position of the curve with the given id, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find(const std::string &id) const {
    auto it = position_of.find(id);
    return it == position_of.end() ? npos : it->second;
  }
};

/// A range query: report every database curve within Fréchet distance
/// `delta` of `curve`.
struct Query {
  Curve curve;
  double delta = 0.0;
};

/*
 * File formats (UTF-8, LF or CRLF, fields separated by runs of spaces or
 * tabs; blank lines are ignored):
 *
 *   manifest   one curve-file path per line, relative to the manifest's
 *              directory; '#'-prefixed lines are comments. The listed path
 *              is the curve's id and must be unique.
 *   curve      one vertex per line: two decimal reals "x y"; any further
 *              columns on the line are ignored. At least two vertices.
 *   queries    one query per line: "<curve-file-path> <delta>", the path
 *              relative to the query file's directory. delta must be a
 *              finite value >= 0.
 */

/// Parses one curve file. The id is stored as given.
Curve load_curve_file(const std::filesystem::path &path,
                      const std::string &id);

Database load_database(const std::filesystem::path &manifest_path);

std::vector<Query> load_queries(const std::filesystem::path &path);

/// Writes the database as curve files plus a manifest under `dir`, with
/// enough precision that loading the result reproduces every vertex
/// exactly. Returns the manifest path.
std::filesystem::path write_database(const Database &db,
                                     const std::filesystem::path &dir);

/// Synthetic trajectory generator configuration.
struct SyntheticSpec {
  enum class Profile {
    /// Noisy near-straight paths between hub points on a grid: curves
    /// sharing a hub pair form tight clusters (similar start/end points
    /// imply small Fréchet distance), with heavily skewed cluster sizes so
    /// thresholds with any exact result count exist.
    ClusteredPaths,
    /// Unstructured random walks; no cluster structure.
    Uniform,
  };

  Profile profile = Profile::ClusteredPaths;
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::size_t min_vertices = 11;
  std::size_t max_vertices = 769;

  // clustered-paths knobs
  std::size_t hub_grid = 4;   ///< hubs on a hub_grid x hub_grid lattice
  double hub_spacing = 100.0; ///< lattice pitch
  double jitter = 5.0;        ///< per-vertex noise half-width

  // uniform-walk knobs
  double walk_extent = 1000.0; ///< start positions drawn from this square
  double step = 25.0;          ///< per-step displacement half-width
};

SyntheticSpec::Profile profile_from_name(const std::string &name);
std::string profile_name(SyntheticSpec::Profile profile);

/// Deterministic database from the spec: the same spec always produces
/// bitwise-identical curves. Ids are "syn00000", "syn00001", ...
Database generate_synthetic(const SyntheticSpec &spec);

/// Per-vertex uniform perturbation in [-amplitude, amplitude]^2, new id.
Curve jitter_curve(const Curve &curve, double amplitude, std::uint64_t seed,
                   const std::string &new_id);

} // namespace frechet

#endif
