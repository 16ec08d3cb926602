#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exmod {

/// Outcome of a law check. On failure, `law` names the first violated law
/// and `witness` holds the element indices at which it fails; the meaning of
/// the witness entries is documented at each validator. Structural failures
/// (wrong table dimensions, mismatched grading groups) are kept distinct
/// from genuine law violations.
struct Report {
  enum class Kind { ok, structural, violation };

  Kind kind = Kind::ok;
  std::string law;
  std::vector<int> witness;
  std::string what;

  bool ok() const { return kind == Kind::ok; }

  static Report pass() { return {}; }

  static Report structural(std::string law, std::string what,
                           std::vector<int> witness = {}) {
    return {Kind::structural, std::move(law), std::move(witness),
            std::move(what)};
  }

  static Report violation(std::string law, std::string what,
                          std::vector<int> witness = {}) {
    return {Kind::violation, std::move(law), std::move(witness),
            std::move(what)};
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument fails a documented mathematical precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// Arguments are structurally incompatible (dimensions, grading group).
struct StructuralError : Error {
  using Error::Error;
};

/// A search or enumeration exceeded its configured budget.
struct ResourceError : Error {
  using Error::Error;
};

/// Budgets for enumeration-heavy operations. `aut_order_bound` caps the
/// group order for automorphism-group computation; `max_search` caps the
/// number of nodes any single backtracking search may visit;
/// `raw_extension_bound` caps |B|·|Q| for the brute-force extension oracle.
struct Limits {
  int aut_order_bound = 24;
  long long max_search = 10'000'000;
  int raw_extension_bound = 8;
};

/// Counts search nodes against Limits::max_search.
class SearchBudget {
 public:
  explicit SearchBudget(const Limits& lim, std::string label)
      : remaining_(lim.max_search), label_(std::move(label)) {}

  void spend(long long n = 1) {
    remaining_ -= n;
    if (remaining_ < 0)
      throw ResourceError(label_ + ": search budget exceeded");
  }

 private:
  long long remaining_;
  std::string label_;
};

}  // namespace exmod
