#pragma once

#include "bcm/calogero.hpp"
#include "bcm/cherednik.hpp"
#include "bcm/gaudin.hpp"
#include "bcm/poly.hpp"
#include "bcm/quasiexp.hpp"
#include "bcm/series.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace bcm::io {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);          // "n/d" string
Rational rational_from(const Json& j);

Json multipoly_json(const MultiPoly& p);        // {"vars", "terms"}; leading term first
MultiPoly multipoly_from(const Json& j);

Json helement_json(const cherednik::HElement& h);
cherednik::HElement helement_from(const Json& j);

Json v1_json(const gaudin::V1Element& v);
gaudin::V1Element v1_from(const Json& j);

Json cmpoint_json(const calogero::CMPoint& pt);
calogero::CMPoint cmpoint_from(const Json& j);

Json qexp_json(const qexp::QExpSpace& w);
qexp::QExpSpace qexp_from(const Json& j);

Json series_json(const TruncSeries<Rational>& s);
TruncSeries<Rational> series_from(const Json& j);

Json diffop_json(const gaudin::DiffOp& d);      // write-only: nested fraction pairs

/// Central-coefficient table: {"N", "c": (n+1)x(n+1) nested HElement values}.
Json central_table_json(int n);

void write_file(const std::string& path, const Json& j);
Json read_file(const std::string& path);

}  // namespace bcm::io
