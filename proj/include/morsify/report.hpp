#pragma once

#include <string>

#include "morsify/morse.hpp"

namespace morsify {

// Deterministic JSON document for a finished analysis. Rationals are
// serialized as base-10 "p" or "p/q" strings, never floats; the exponent
// "inf" marks leaves. Byte-identical across runs on identical input.
std::string emit_report(const MorsificationReport& report);

// Human-readable summary for the console.
std::string summarize_report(const MorsificationReport& report);

}  // namespace morsify
