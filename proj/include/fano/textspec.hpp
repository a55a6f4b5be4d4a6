#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "fano/spaces.hpp"

namespace fano {

// Grammar (whitespace-separated key=value):
//   ci n=<int> [w=<int,int,...>] d=<int,int,...>
//   grass k=<int> n=<int>
//   product (<spec>) (<spec>)
//   bundle base=(<spec>) c1L=<int>
// c1L is an integer multiple of the base's first Picard generator.

struct SpecNode;
using SpecNodePtr = std::shared_ptr<const SpecNode>;

struct CiNode {
    CompleteIntersectionSpec spec;
};
struct GrassNode {
    GrassmannianSpec spec; // normalized
};
struct ProductNode {
    SpecNodePtr left;
    SpecNodePtr right;
};
struct BundleNode {
    SpecNodePtr base;
    int c1l = 0;
};

struct SpecNode {
    std::variant<CiNode, GrassNode, ProductNode, BundleNode> node;
};

/// Throws ParseError (with position) on malformed input.
SpecNode parse_spec(const std::string& text);

/// Canonical rendering: degrees sorted decreasing, weights increasing and
/// omitted when trivial, Grassmannian parameters normalized.
std::string canonical_text(const SpecNode& node);

Space build_space(const SpecNode& node);

/// The closed-form 2-Fano verdict where one exists: complete intersections
/// and Grassmannians have direct oracles, bundles use the base criterion,
/// and products inherit "true" when both factors classify as 2-Fano.
std::optional<bool> oracle_two_fano(const SpecNode& node);

} // namespace fano
