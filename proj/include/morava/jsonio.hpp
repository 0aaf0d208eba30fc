#ifndef MORAVA_JSONIO_HPP
#define MORAVA_JSONIO_HPP

#include <json.hpp>

#include "morava/cpmod.hpp"
#include "morava/group.hpp"
#include "morava/verify.hpp"

namespace morava::io {

// group documents: {"type":"polycyclic"|"family"|"cyclic"|"product", ...}
grp::GroupPtr group_from_json(const nlohmann::json& j);
// restricted to the spec-expressible types (polycyclic, cyclic, family)
grp::GroupSpec group_spec_from_json(const nlohmann::json& j);

// {"p":2, "matrix":[[0,1],[1,0]]}
cpmod::CpModule module_from_json(const nlohmann::json& j);

verify::RingPresentation presentation_from_json(const nlohmann::json& j);

// {"p":2, "s":2?, "variables":["x","y"] or [{"name","degree"}...],
//  "generators":["x^2+y", ...]}
struct IdealFile {
    std::uint32_t p = 2;
    std::uint32_t s = 2;
    fp::RingPtr ring;
    std::vector<fp::Polynomial> generators;
};
IdealFile ideal_from_json(const nlohmann::json& j, fp::MonomialOrder order);

nlohmann::ordered_json report_json(const verify::VerificationReport& rep);
nlohmann::ordered_json classification_json(const verify::FamilyClassification& c);
nlohmann::ordered_json fingerprint_json(const grp::Fingerprint& fp);

nlohmann::json load_json_file(const std::string& path);

} // namespace morava::io

#endif
