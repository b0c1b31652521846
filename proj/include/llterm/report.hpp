#pragma once
// JSON and text renderings of analysis results.

#include <llterm/decision.hpp>
#include <llterm/simulator.hpp>

#include <json.hpp>

#include <string>

namespace llterm {

using Json = nlohmann::ordered_json;

Json to_json(const IntVector& v);
Json to_json(const PointCertificate& c);
Json to_json(const Verdict& v);
Json to_json(const Trace& t);
Json spectrum_json(const SpectralData& s);
Json algebraic_json(const AlgebraicNumber& x);
Json relations_json(const WitnessSet& w);
// Relation lattice and torus of an explicit tuple.
Json relations_json(const std::vector<AlgebraicNumber>& mu, const RelationOptions& opt = {});
Json witness_json(const WitnessSet& w);
Json membership_json(const WitnessSet& w, const IntVector& u);

std::string verdict_text(const Verdict& v);
std::string certificate_text(const PointCertificate& c);

}  // namespace llterm
