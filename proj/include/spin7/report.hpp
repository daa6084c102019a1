#pragma once
// JSON / markdown rendering of results, and the content of the committed golden files.

#include <string>
#include <vector>

#include "json.hpp"

#include "spin7/classify.hpp"

namespace spin7::report {

using nlohmann::ordered_json;
using Json = ordered_json;

Json scalar(const Scalar& s);
Json matrix(const Matrix& m);
// {"diag": [...]} when diagonal, else {"matrix": [[...]]}
Json ricci(const Matrix& m);
std::string diag_str(const Matrix& m);

// exact parameter samples used by the golden files and the acceptance checks
struct Sample {
    std::string family;
    std::vector<Scalar> params;
};
const std::vector<Sample>& family_samples();
// (case, family, params)
struct CurvatureSample {
    std::string case_id;
    std::string family;
    std::vector<Scalar> params;
};
const std::vector<CurvatureSample>& curvature_samples();

std::vector<Scalar> params_from_assignments(const TorsionFamily& f, const std::string& text);
Json params_json(const TorsionFamily& f, const std::vector<Scalar>& p);

Json family_sample(const TorsionFamily& f, const std::vector<Scalar>& p);
Json curvature_tensor(const CurvatureTensor& r);
Json curvature_sample(const CurvatureSample& s);
Json table(const std::vector<ClassificationRow>& rows);
std::string table_markdown(const std::vector<ClassificationRow>& rows);

Json families_golden();
Json curvature_golden();
Json constants_golden();

// generic fallback: nested key/value lists
std::string markdown(const Json& j);

}  // namespace spin7::report
