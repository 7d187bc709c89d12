#pragma once

#include "stc/graph.hpp"
#include "stc/io.hpp"

#include <sstream>
#include <string>
#include <vector>

// Graph from edge-list text, e.g. G("a b\nb c").
inline stc::Graph G(const std::string &text) {
  std::istringstream in(text);
  return stc::parse_edge_list(in, "test");
}

inline std::vector<std::string> L(std::initializer_list<const char *> xs) {
  return {xs.begin(), xs.end()};
}

inline const char *const k_p3 = "a b\nb c\n";
inline const char *const k_p4 = "a b\nb c\nc d\n";
inline const char *const k_k3 = "a b\na c\nb c\n";
inline const char *const k_k4 = "a b\na c\na d\nb c\nb d\nc d\n";
inline const char *const k_c4 = "a b\nb c\nc d\nd a\n";
inline const char *const k_c6 = "a b\nb c\nc d\nd e\ne f\nf a\n";
inline const char *const k_claw = "u a\nu b\nu c\n";
inline const char *const k_bowtie = "a b\na c\nb c\nc d\nc e\nd e\n";
