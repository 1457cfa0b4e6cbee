// SPDX-License-Identifier: Apache-2.0
//
// JSON forms of verdicts and vertex-type reports. Field names are stable and
// vertex labels are 0-based.

#ifndef WORDREP_JSON_IO_HPP
#define WORDREP_JSON_IO_HPP

#include <json.hpp>

#include "wordrep/characterization.hpp"
#include "wordrep/split.hpp"

namespace wordrep {

/// {representable, reason, witness} with witness {pattern, vertices},
/// {orientation} or null.
nlohmann::json verdict_json(const Verdict& v);

/// {vertex, kind, source_group, sink_group, boundary}; boundary is null
/// unless the kind is C.
nlohmann::json report_json(const VertexTypeReport& r);

/// {y, x, boundary, kind}.
nlohmann::json violation_json(const OrderViolation& v);

}  // namespace wordrep

#endif  // WORDREP_JSON_IO_HPP
