#pragma once

#include <string>
#include <vector>

#include "fiberlab/cayley/trace.hpp"

namespace fiberlab {

enum class IdealForm { Unit, Zero, Principal, Subspace };

std::string to_string(IdealForm form);

/// An ideal of C in normal form: unit or zero over a field, a monic generator
/// over a one-parameter ring, a reduced echelon basis over a finite C.
struct IdealDescriptor {
  CentralBase base;
  IdealForm form = IdealForm::Zero;
  Poly generator;                 ///< principal form, monic, in the base variable
  std::vector<SVector> basis;     ///< subspace form, coordinates on monomials of C
  bool sub_ideal = false;         ///< generated by principal minors only

  std::string to_string() const;
};

/// Monomials of a finite C in mixed radix order, first symbol slowest.
std::vector<CPoly::Exponents> finite_monomials(const CentralShape& shape);
SVector finite_coordinates(const CentralShape& shape, const CPoly& c);
CPoly from_finite_coordinates(const ShapePtr& shape, const SVector& v);

/// Ideal of all k x k minors of the Gram matrix.
IdealDescriptor modified_discriminant_ideal(const TraceData& td, size_t k);
/// Ideal of the principal k x k minors, contained in D_k.
IdealDescriptor discriminant_ideal_sub(const TraceData& td, size_t k);

/// det of the Gram matrix as an element of C.
CPoly discriminant(const TraceData& td);

/// I contained in J, exactly.
bool ideal_contained(const IdealDescriptor& i, const IdealDescriptor& j);

struct ZeroLocus {
  bool all = false;
  std::vector<Scalar> roots;                ///< univariate: values of the variable
  std::vector<CentralCharacter> points;     ///< finite or field: characters in the locus

  bool contains(const CentralBase& base, const CentralCharacter& chi) const;
  std::string describe(const CentralBase& base) const;
};

/// V(I). Over a one-parameter ring the roots are matched against the samples,
/// roots of unity and rational candidates. Throws UnrecognizedRoot on a
/// residual factor.
ZeroLocus zero_locus(const IdealDescriptor& id);

/// Same zero locus, compared pointwise on all characters and on the roots.
bool same_zero_locus(const IdealDescriptor& a, const IdealDescriptor& b);

/// Sd at every sampled character.
struct SdProfile {
  CharacterSpace space;
  std::vector<size_t> sd;  ///< aligned with space.characters
  size_t dim = 0;
};

SdProfile sd_profile(const HopfPresentation& pres, const SymbolicAlgebra& algebra,
                     const std::optional<std::vector<Scalar>>& samples = std::nullopt);

/// Sampled characters with Sd < k.
std::vector<CentralCharacter> sd_zero_locus(const SdProfile& profile, size_t k);

/// Least k with a character of Sd < k, that is min Sd + 1.
size_t lowest_level(const SdProfile& profile);

enum class LocusClass { Empty, Identity, All, Other };
std::string to_string(LocusClass c);

struct DiscRow {
  size_t k = 0;
  IdealDescriptor md;
  IdealDescriptor sub;
  ZeroLocus locus;
  std::vector<CentralCharacter> sd_locus;
  bool sandwich = false;
  LocusClass symbolic_class = LocusClass::Other;
  LocusClass sd_class = LocusClass::Other;
};

struct DiscTable {
  CentralBase base;
  std::vector<DiscRow> rows;  ///< k = k_min .. k_max
  size_t lowest_level = 0;
  CPoly discriminant;
  bool chain_ok = true;       ///< MD_{k+1} in MD_k and sub in MD_k for every row
};

/// MD_k, the principal-minor sub-ideal, both zero loci and the classes for
/// k_min..k_max. Throws ConsistencyViolation when the symbolic and sampled
/// loci disagree at a sampled character.
DiscTable discriminant_table(const TraceData& td, const SdProfile& profile, size_t k_min, size_t k_max);

}  // namespace fiberlab
