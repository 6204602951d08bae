#pragma once

#include "splicekit/engine.hpp"
#include "splicekit/json_io.hpp"

namespace splicekit {

Json complexity_to_json(const Complexity& c);
Json certificate_to_json(const Certificate& cert);
Json verdict_to_json(const Verdict& verdict);
Json analysis_to_json(const AnalysisResult& result);

// 64-bit FNV-1a fingerprint of the raw input bytes, hex encoded.
std::string digest(const std::string& bytes);

}  // namespace splicekit
