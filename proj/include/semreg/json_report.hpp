#pragma once

#include <json.hpp>

#include "semreg/instance_io.hpp"
#include "semreg/lattice.hpp"
#include "semreg/pair_analysis.hpp"
#include "semreg/regularity.hpp"
#include "semreg/star_sequence.hpp"

namespace semreg {

using Json = nlohmann::json;

Json json_int(const Int& v);  // number when it fits in 64 bits, else decimal string
Json json_point(const LatticePoint& p);
Json json_sequence(const StarSequence& s);
Json json_instance(const InstanceFile& instance);

Json json_report(const ValidationReport& report);
Json json_report(const DecompositionReport& report, const EgVerdict& verdict);
Json json_report(const GapReport& report);
Json json_report(const PairAnalysis& analysis);
Json json_report(const ConjecturePairResult& pair);
Json json_report(const ConjectureReport& report);

const char* verdict_name(PairVerdict v);
const char* scope_name(ConjectureScope s);

}  // namespace semreg
