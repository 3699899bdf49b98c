// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "regfactor/graph.hpp"

namespace regfactor {

/// Decodes one graph6 line (McKay's format). An optional ">>graph6<<" prefix
/// and trailing whitespace are accepted. Throws ParseError with the offending
/// byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 without header or trailing newline.
std::string to_graph6(const Graph& g);

}  // namespace regfactor
