#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtopo/generators.hpp"
#include "dtopo/poset.hpp"
#include "dtopo/recognizer.hpp"
#include "dtopo/simplicial.hpp"

namespace dtopo {

enum class EvaluationPath { fast, recursive, both };

/// Coarse verdict. The empty order is both a (-1)-surface and a (-1)-PCM.
enum class Kind { empty_order, surface, pcm, neither };

const char* to_string(EvaluationPath path);
const char* to_string(Kind kind);

struct Timing {
  std::string check;
  double milliseconds = 0.0;
};

/// Unset optionals were not evaluated on the path that produced the verdict.
struct Classification {
  int rank = -1;
  std::optional<bool> is_surface;
  std::optional<bool> is_pcm;
  std::optional<bool> is_smooth_pcm;
  std::optional<bool> is_pseudomanifold;
  std::optional<bool> is_normal_pseudomanifold;
  std::optional<bool> border_empty;
  std::optional<std::size_t> border_face_count;
  std::optional<bool> condition_c;
  EvaluationPath path = EvaluationPath::recursive;
  /// classify_fast delegated to the recursive path (rank < 2).
  bool fast_fell_back = false;
  /// Recognizer evaluations (memo misses) spent on this verdict.
  std::size_t recursive_evaluations = 0;
  std::vector<std::size_t> faces_per_rank;
  std::vector<Timing> timings;

  Kind kind() const;
  double total_milliseconds() const;
};

/// Applies the recursive definitions to the face poset.
Classification classify_recursive(const Poset& p, RecognizerOptions options = {});
/// As above plus the pseudomanifold and normal-pseudomanifold tests.
Classification classify_recursive(const SimplicialComplex& k, RecognizerOptions options = {});

/// Normal-pseudomanifold test plus a combinatorial border (closure of the
/// ridges with a single cofacet) decide surface / PCM / neither for rank
/// >= 2. Smoothness comes from condition (C) when it holds, otherwise from
/// the recursive smooth-PCM test. Ranks below 2 use classify_recursive.
Classification classify_fast(const SimplicialComplex& k, RecognizerOptions options = {});

/// Description of the first field where two verdicts differ, if any.
std::optional<std::string> compare_classifications(const Classification& fast,
                                                   const Classification& recursive);

class DisagreementError : public std::runtime_error {
 public:
  DisagreementError(const std::string& what, std::filesystem::path dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const std::filesystem::path& dump_path() const noexcept { return dump_; }

 private:
  std::filesystem::path dump_;
};

/// Runs both paths; throws DisagreementError (after dumping the instance as
/// a facet file into `dump_dir`) if they differ. Returns the merged verdict
/// with path == both.
Classification classify_both(const SimplicialComplex& k, RecognizerOptions options = {},
                             const std::filesystem::path& dump_dir =
                                 std::filesystem::temp_directory_path());

struct CrossCheckRow {
  std::string name;
  std::size_t faces = 0;
  int rank = -1;
  Kind kind = Kind::neither;
  double fast_ms = 0.0;
  double recursive_ms = 0.0;
  bool fast_fell_back = false;
  bool agree = true;
  std::string mismatch;
};

struct CrossCheckReport {
  std::vector<CrossCheckRow> rows;
  std::size_t disagreements = 0;
  std::size_t count(Kind kind) const;
};

struct CrossCheckOptions {
  RecognizerOptions recognizer;
  std::filesystem::path dump_dir = std::filesystem::temp_directory_path();
  /// Throw DisagreementError on the first mismatch instead of recording it.
  bool stop_on_disagreement = true;
  /// Replaces classify_fast (fault injection in tests).
  std::function<Classification(const SimplicialComplex&)> fast;
};

/// Runs fast and recursive classification over every instance, recording
/// timings. Every disagreeing instance is written to `dump_dir` as a facet
/// file named after the instance.
CrossCheckReport cross_check(std::span<const NamedInstance> instances,
                             const CrossCheckOptions& options = {});

}  // namespace dtopo
