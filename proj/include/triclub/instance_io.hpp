#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triclub/generators.hpp"
#include "triclub/properties.hpp"

namespace triclub {

struct instance_file {
    graph g;
    std::optional<problem_spec> spec;
    std::vector<std::pair<int, role_label>> layout;  // (vertex id, label), optional section
};

// Accepts plain 0-based edge lists ("u v" per line, optional "c n <count>"
// header) and DIMACS-like files ("p edge n m" with 1-based "e u v" lines).
// A "c spec variant=... s=... l=... k=... seed=..." comment populates the spec.
instance_file parse_instance(const std::string& text);

// Plain edge-list form with c-comment headers; parse(serialize(x)) == x.
std::string serialize_instance(const instance_file& inst);

instance_file instance_of(const gadget_instance& gi);

// One vertex id per line, then optional "e u v" witness edges.
certificate parse_certificate(const std::string& text);
std::string serialize_certificate(const certificate& cert);

}  // namespace triclub
