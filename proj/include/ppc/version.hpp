#pragma once

namespace ppc {

inline constexpr const char* kToolVersion = "1.0.0";

// Identifier of the seeded uniform stream used by every random generator.
// splitmix64 state update, top 53 bits of each output scaled to [0,1).
// Recorded in report metadata so runs are reproducible across platforms.
inline constexpr const char* kGeneratorId = "splitmix64-u53";

}  // namespace ppc
