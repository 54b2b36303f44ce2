#pragma once

#include <string>

namespace connasym {

// How a structure splits into connected pieces: an unordered set of
// components, an ordered sequence of blocks, or a cycle of blocks.
enum class DecompKind { SET, SEQ, CYC };

const char* decomp_name(DecompKind k);
DecompKind decomp_from_name(const std::string& name);

}  // namespace connasym
