#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace obsalg {

/// Base class of every error raised by the library. `kind()` is the stable
/// machine-readable tag used in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define OBSALG_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  };

OBSALG_DEFINE_ERROR(ParseError)
OBSALG_DEFINE_ERROR(ZeroUnit)
OBSALG_DEFINE_ERROR(DimensionMismatch)
OBSALG_DEFINE_ERROR(Singular)
OBSALG_DEFINE_ERROR(NotHermitian)
OBSALG_DEFINE_ERROR(ZeroPolynomial)
OBSALG_DEFINE_ERROR(IncompatibleInvariants)
OBSALG_DEFINE_ERROR(AxiomFailure)
OBSALG_DEFINE_ERROR(NotClassified)
OBSALG_DEFINE_ERROR(NotSemisimple)
OBSALG_DEFINE_ERROR(StarInconsistent)
OBSALG_DEFINE_ERROR(NoConjugator)
OBSALG_DEFINE_ERROR(TooLarge)
OBSALG_DEFINE_ERROR(NotPerturbative)
OBSALG_DEFINE_ERROR(SchemaMismatch)

#undef OBSALG_DEFINE_ERROR

/// Structure constants violate (anti)symmetry at the index pair (i, j).
class SymmetryViolation : public Error {
 public:
  SymmetryViolation(std::size_t i, std::size_t j, const std::string& what)
      : Error("SymmetryViolation", what), i_(i), j_(j) {}
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

/// A candidate squaring map failed the homogeneity probe sq(2e) = 4 sq(e).
class NotQuadratic : public Error {
 public:
  NotQuadratic(std::size_t index, const std::string& what)
      : Error("NotQuadratic", what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Central-element splitting ran out of seeds; `seeds()` lists every seed tried.
class MaxRetriesExceeded : public Error {
 public:
  MaxRetriesExceeded(std::vector<std::uint64_t> seeds, const std::string& what)
      : Error("MaxRetriesExceeded", what), seeds_(std::move(seeds)) {}
  const std::vector<std::uint64_t>& seeds() const noexcept { return seeds_; }

 private:
  std::vector<std::uint64_t> seeds_;
};

}  // namespace obsalg
