#pragma once

#include <json.hpp>

#include "imagcone/imagcone.hpp"
#include "imagcone/universal.hpp"

namespace imagcone {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// Rationals serialize as "p/q" strings; general elements as a map from the
/// subset product to the rational coefficient, e.g. {"1":"1/4","5":"1/4"}.
Json scalar_to_json(const Scalar& s);
/// Accepts integers, "p/q" strings, sum-of-sqrt strings and the map form.
Scalar scalar_from_json(const Field& f, const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Field& f, const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Field& f, const Json& j);

Json cone_to_json(const PolyCone& c);
PolyCone cone_from_json(const Field& f, const Json& j);

Json root_to_json(const BasedRootSystem& sys, const Root& r);
Json facial_subset_to_json(const FacialSubset& f);
Json z_membership_to_json(const ZMembership& z);

/// System specification: exactly one of "gram", "form"+"simples",
/// "coxeter_labels"; "field" defaults to the rationals.
BasedRootSystem system_from_json(const Json& j);
Json system_to_json(const BasedRootSystem& sys);

/// Appends decimal approximations next to exact values ("approx" keys).
void attach_float_approximations(Json& j);

} // namespace imagcone
