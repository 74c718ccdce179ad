#pragma once

#include "json.hpp"

#include "catgsb/engine.hpp"
#include "catgsb/verify.hpp"

namespace catgsb {

/// Common JSON envelope: tool name, version, command and a config echo.
nlohmann::json make_envelope(const std::string& command,
                             nlohmann::json config);

nlohmann::json presentation_summary_json(const Presentation& p);

nlohmann::json check_report_json(const Basis& basis, const CheckReport& r);

nlohmann::json completion_json(const Basis& after, const CompletionResult& r);

/// Serializable reduction certificate; trace_from_json reparses it so a
/// replay can be run without the producing basis.
nlohmann::json trace_json(const Quiver& q, const ReductionTrace& t);
ReductionTrace trace_from_json(const Quiver& q, const nlohmann::json& j);

nlohmann::json suite_report_json(const SuiteReport& r);

}  // namespace catgsb
