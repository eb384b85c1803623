#pragma once

#include <map>
#include <string>

#include "hcenter/characters.hpp"
#include "hcenter/diagrams.hpp"
#include "hcenter/measures.hpp"
#include "hcenter/shifted.hpp"

namespace hcenter {

// JSON wire formats. Serialization is canonical (sorted keys, compact,
// entries in canonical order), so parse followed by serialize reproduces
// any serialized output byte for byte. Parsers throw DomainError
// (DiagramError for malformed diagrams).

std::string partition_to_json(const Partition& p);  // [4,2,1]
Partition partition_from_json(const std::string& text);

// {"atoms":[{"w":"1/2","x":-1},{"w":"1/2","x":1}]}
std::string measure_to_json(const DiscreteMeasure& m);
DiscreteMeasure measure_from_json(const std::string& text);

// {"basis":"pshift","terms":[{"coef":"3/2","part":[2,2]}]}
std::string shifted_to_json(const ShiftedSymFn& f);
ShiftedSymFn shifted_from_json(const std::string& text);
// Same layout with "basis":"sstar".
std::string sstar_to_json(const std::map<Partition, Rational, CanonicalLess>& coeffs);

// {"bottom":[],"slices":[{"kind":"cup_ccw","pos":0}],"top":[]}
// kinds: cup_cw, cup_ccw, cap_cw, cap_ccw, cross, dot; signs "+"/"-".
std::string diagram_to_json(const DiagramWord& w);
DiagramWord diagram_from_json(const std::string& text);

// {"class_coeffs":[{"coef":"3","part":[2,1,1]}],"n":4}
std::string central_to_json(const CentralElement& x);
CentralElement central_from_json(const std::string& text);

}  // namespace hcenter
