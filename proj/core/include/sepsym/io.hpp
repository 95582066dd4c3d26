#ifndef SEPSYM_IO_HPP
#define SEPSYM_IO_HPP

#include <string>
#include <string_view>

#include "sepsym/multisym.hpp"
#include "sepsym/orbits.hpp"
#include "sepsym/separating.hpp"

namespace sepsym {

/// Orbit literal `a1:c1,a2:c2/n` with element indices; `/n` is the zero orbit.
std::string format_orbit(const OrbitMultiplicity& orbit);
OrbitMultiplicity parse_orbit(const Field& field, std::string_view literal);

/// Multi-orbit literal `(i1,...,im):c;.../n`; `/0` is the empty multiset.
std::string format_multi_orbit(const MultiOrbit& orbit);
MultiOrbit parse_multi_orbit(const Field& field, unsigned m, std::string_view literal);

/// {"q","n","k","kind","v","w"} with orbit literals.
std::string witness_json(const WitnessPair& witness);

/// {"q","m","n","kind","v","w"} with multi-orbit literals.
std::string multi_witness_json(const Field& field, const MultiWitness& witness);

/// {"q","n","setSize","orbitCount","klrBound"[,"defect"]}; the count is a
/// decimal string.
std::string bounds_json(const BoundsReport& report);

}  // namespace sepsym

#endif
