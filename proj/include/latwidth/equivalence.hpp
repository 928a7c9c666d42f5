#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latwidth/lattice_core.hpp"

namespace latwidth {

// Distinguished representative of a unimodular equivalence class. The first
// vertex is (0,0) and the cycle is counterclockwise.
struct CanonicalForm {
    std::vector<Point> vertices;
    // Flattened coordinates joined by commas, e.g. "0,0,1,0,0,1".
    std::string byte_key;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.vertices == b.vertices; }
};

// Canonical form together with a map sending the input onto it.
struct Canonicalization {
    CanonicalForm form;
    UnimodularMap map;
};

CanonicalForm canonical_form(const Polygon& p);
Canonicalization canonicalize(const Polygon& p);

// Every candidate normalization considered by canonical_form, one per
// (orientation, vertex, incident edge). Exposed for testing.
std::vector<Canonicalization> canonical_candidates(const Polygon& p);

// Witness m with apply_map(m, p) == q, or nullopt if not equivalent.
std::optional<UnimodularMap> are_equivalent(const Polygon& p, const Polygon& q);

std::string byte_key(std::span<const Point> vertices);

}  // namespace latwidth
