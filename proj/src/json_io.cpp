// SPDX-License-Identifier: Apache-2.0

#include "wordrep/json_io.hpp"

namespace wordrep {

using nlohmann::json;

json verdict_json(const Verdict& v) {
  json out = {{"representable", v.representable}, {"reason", to_string(v.reason)}};
  if (v.pattern) {
    out["witness"] = {{"pattern", v.pattern->pattern}, {"vertices", v.pattern->vertices}};
  } else if (v.orientation) {
    out["witness"] = {{"orientation", v.orientation->bitstring()}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json report_json(const VertexTypeReport& r) {
  json out = {{"vertex", r.vertex},
              {"kind", to_string(r.kind)},
              {"source_group", r.source_group},
              {"sink_group", r.sink_group}};
  if (r.boundary) {
    out["boundary"] = {r.boundary->first, r.boundary->second};
  } else {
    out["boundary"] = nullptr;
  }
  return out;
}

json violation_json(const OrderViolation& v) {
  return {{"y", v.y},
          {"x", v.x},
          {"boundary", {v.boundary.first, v.boundary.second}},
          {"kind", to_string(v.kind)}};
}

}  // namespace wordrep
