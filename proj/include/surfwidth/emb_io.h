#pragma once

#include <iosfwd>
#include <string>

#include "surfwidth/embedding.h"

namespace surfwidth {

/// Reads the line-based .emb format:
///   vertices <n>
///   edge <id> <u> <v> <+|->
///   rot <v>: <edge-id> <edge-id> ...
/// Edge ids must be 0..m-1; every vertex needs one rot line listing all of
/// its incident edges in cyclic order. Lines starting with '#' are ignored.
/// Throws ParseError with the offending line number.
EmbeddedGraph read_emb(std::istream& in);

void write_emb(const EmbeddedGraph& g, std::ostream& out);

EmbeddedGraph load_emb(const std::string& path);
void save_emb(const EmbeddedGraph& g, const std::string& path);

} // namespace surfwidth
