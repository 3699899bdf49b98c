// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/graph6.hpp"

#include <cstdint>
#include <vector>

#include "regfactor/error.hpp"

namespace regfactor {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int decode_byte(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126",
                     pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (pos >= text.size()) throw ParseError("missing order header", pos);

  // Order: 1, 4 or 8 bytes.
  std::int64_t n = 0;
  if (text[pos] != '~') {
    n = decode_byte(text, pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    if (pos + 8 > text.size()) throw ParseError("truncated 8-byte order header", pos);
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | decode_byte(text, pos + i);
    pos += 8;
  } else {
    if (pos + 4 > text.size()) throw ParseError("truncated 4-byte order header", pos);
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | decode_byte(text, pos + i);
    pos += 4;
  }
  if (n > (1 << 20)) throw ParseError("graph order too large", 0);

  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t need = (bits + 5) / 6;
  const std::int64_t have = static_cast<std::int64_t>(text.size() - pos);
  if (have < need) {
    throw ParseError("truncated bit vector: expected " + std::to_string(need) +
                         " bytes, found " + std::to_string(have),
                     text.size());
  }
  if (have > need) throw ParseError("trailing bytes after bit vector", pos + need);

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int word = decode_byte(text, at);
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const std::size_t at = pos + static_cast<std::size_t>(need - 1);
    const int word = decode_byte(text, at);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((word & ((1 << pad) - 1)) != 0) throw ParseError("nonzero padding bits", at);
  }
  for (std::int64_t i = 0; i < need; ++i) decode_byte(text, pos + i);
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int word = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    word <<= (6 - filled);
    out.push_back(static_cast<char>(word + kBias));
  }
  return out;
}

}  // namespace regfactor
