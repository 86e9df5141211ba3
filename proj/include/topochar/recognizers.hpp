#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "topochar/complex.hpp"

namespace topochar {

enum class Answer { kYes, kNo, kUnknown };

std::string to_string(Answer a);

struct Verdict {
  Answer answer = Answer::kUnknown;
  /// Reduction vertices when the answer is YES: the puncture sequence for
  /// contractibility, the puncture vertex for spheres.
  std::vector<VertexId> trace;
  /// Recognizer calls spent on the query.
  std::uint64_t calls = 0;

  bool yes() const noexcept { return answer == Answer::kYes; }
  bool no() const noexcept { return answer == Answer::kNo; }
};

inline constexpr std::uint64_t kDefaultRecognizerBudget = 100'000;

/**
 * Recursive recognizers for contractible complexes, d-spheres, d-balls and
 * d-manifolds, anchored at the void (the (-1)-sphere) and the one-point
 * complex. The searches are existential, so NO is only returned after an
 * exhaustive search; running out of budget yields UNKNOWN.
 *
 * Definitive answers are memoized on the exact labeled complex and survive
 * across queries. The budget applies per top-level query. Not thread safe;
 * use one Recognizer per thread.
 */
class Recognizer {
 public:
  explicit Recognizer(std::uint64_t budget = kDefaultRecognizerBudget) : budget_(budget) {}

  Verdict contractible(const Complex& g);
  Verdict sphere(const Complex& g, int d);
  Verdict ball(const Complex& g, int d);
  Verdict manifold(const Complex& g, int d);
  Verdict manifold_with_boundary(const Complex& g, int d);
  Verdict dehn_sommerville(const Complex& g, int d);

  /// Simplices whose unit sphere is a ball, closed up. DomainError unless
  /// `g` is certified a d-manifold with boundary.
  Complex manifold_boundary(const Complex& g, int d);

 private:
  enum class Kind { kContractible, kSphere, kBall, kManifold, kBoundaryManifold, kDehnSommerville };
  struct Result {
    Answer answer;
    std::vector<VertexId> trace;
  };

  Result run(Kind kind, const Complex& g, int d);
  Result eval(Kind kind, const Complex& g, int d);
  Result contractible_impl(const Complex& g);
  Result sphere_impl(const Complex& g, int d);
  Result ball_impl(const Complex& g, int d);
  Result manifold_impl(const Complex& g, int d, bool allow_boundary);
  Result dehn_sommerville_impl(const Complex& g, int d);
  Verdict top(Kind kind, const Complex& g, int d);

  std::uint64_t budget_;
  std::uint64_t calls_ = 0;
  std::map<std::tuple<int, int, std::vector<Simplex>>, Result> memo_;
};

Verdict is_contractible(const Complex& g, std::uint64_t budget = kDefaultRecognizerBudget);
Verdict is_sphere(const Complex& g, int d, std::uint64_t budget = kDefaultRecognizerBudget);
Verdict is_ball(const Complex& g, int d, std::uint64_t budget = kDefaultRecognizerBudget);
Verdict is_manifold(const Complex& g, int d, std::uint64_t budget = kDefaultRecognizerBudget);
Verdict is_manifold_with_boundary(const Complex& g, int d,
                                  std::uint64_t budget = kDefaultRecognizerBudget);
Verdict is_dehn_sommerville(const Complex& g, int d,
                            std::uint64_t budget = kDefaultRecognizerBudget);
Complex manifold_boundary(const Complex& g, int d, std::uint64_t budget = kDefaultRecognizerBudget);

}  // namespace topochar
