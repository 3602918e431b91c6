#pragma once

// Binary state snapshots: fixed little-endian header plus raw component
// planes. Round-trips are bit-exact.

#include <string>

#include "liemag/state.hpp"

namespace liemag {

void save_snapshot(const std::string& path, const SimState& st);

// Reconstructs the state; field ids and component counts come from the file.
SimState load_snapshot(const std::string& path);

}  // namespace liemag
