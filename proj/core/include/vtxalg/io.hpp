#pragma once

#include "vtxalg/constructions.hpp"
#include "vtxalg/operator_space.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vtx {

// Which R-map the jacobi-like suite should use.
struct RMapSpec {
    std::string kind; // identity | tensor-swap | cocycle | cross
    std::vector<std::size_t> factor_dims; // tensor-swap
    std::size_t base_dim = 0;             // cross
};

struct OperatorSet {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<VertexOperator> ops;
};

// In-memory form of an algebra file. Every section except the table is optional.
struct AlgebraFile {
    std::string name;
    AlgebraStructure algebra;
    std::optional<GradedTag> grading;
    std::optional<CocycleData> cocycle;
    std::optional<GroupActionData> group;
    std::optional<AssocAlgebraData> assoc;
    std::optional<ModuleStructure> module;
    std::optional<OperatorSet> operators;
    std::optional<RMapSpec> rmap;
};

inline constexpr int kFormatVersion = 1;

// Throws ParseError on malformed JSON or field types, ValidationError when a
// section does not satisfy its validator. With validate = false only the
// shape is checked (used for construction inputs without a table).
AlgebraFile parse_algebra_json(std::string_view text, const std::string &origin = "<input>",
                               bool validate = true);
AlgebraFile parse_algebra_file(const std::string &path, bool validate = true);

// Canonical serialization: fixed key order, two-space indent, trailing newline.
std::string emit_algebra_json(const AlgebraFile &f);

// Sparse {name: "p/q"} text of a vector, in basis order.
std::string vector_text(const VectorQ &v, const std::vector<std::string> &basis);

// Builds the R-map described by the file, if any.
std::optional<RMap> rmap_of(const AlgebraFile &f);

} // namespace vtx
