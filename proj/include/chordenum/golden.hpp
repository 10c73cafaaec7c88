#pragma once

#include <array>
#include <string>
#include <vector>

// Published reference values for n = 1..20, as decimal strings.
namespace chordenum::golden {

// Columns: linear, chord, up to rotation, up to rotation and reflection.
// For simple diagrams the linear column at n is the count with n chords.
using GoldenRow = std::array<const char*, 4>;
using GoldenTable = std::vector<GoldenRow>;

const GoldenTable& loopless_table();
const GoldenTable& simple_table();

}  // namespace chordenum::golden
