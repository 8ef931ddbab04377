#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relquiv {

// Raised by CLI-facing code when an operation needs axioms the input lacks.
struct AxiomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on malformed .bqv / JSON input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
};

// Monomial presentation kQ/I of a quiver with a set of generating paths for
// the ideal. Vertices and arrows are addressed by declaration index
// everywhere; names only matter at the I/O boundary.
struct StringPresentation {
    std::vector<std::string> vertex_names;
    std::vector<Arrow> arrows;
    std::vector<std::vector<int>> relations;  // words as arrow-index lists

    std::vector<std::vector<int>> out_arrows;  // per vertex
    std::vector<std::vector<int>> in_arrows;

    int n_vertices() const { return static_cast<int>(vertex_names.size()); }
    int n_arrows() const { return static_cast<int>(arrows.size()); }

    void rebuild_adjacency();
    int vertex_index(const std::string& name) const;  // -1 if unknown
    int arrow_index(const std::string& name) const;

    // True iff the word contains some relation as a contiguous subword.
    bool word_is_zero(const std::vector<int>& word) const;

    StringPresentation opposite() const;
};

// A path in the quiver: source vertex plus an arrow word (empty = stationary
// path e_source).
struct Path {
    int source = -1;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool stationary() const { return arrows.empty(); }
    int target(const StringPresentation& P) const;
    std::vector<int> vertices(const StringPresentation& P) const;
    bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
};

Path stationary_path(int v);

// Concatenation p then q. Throws if target(p) != source(q); returns nullopt
// when the product is zero in the algebra.
std::optional<Path> compose(const StringPresentation& P, const Path& p, const Path& q);

bool path_nonzero(const StringPresentation& P, const Path& p);

std::string path_to_string(const StringPresentation& P, const Path& p);

// The unique quiver-walk path u ... v when the underlying graph is a tree and
// all steps go forward; nullopt if no directed path exists. The result may be
// zero in the algebra; callers test separately.
std::optional<Path> find_path(const StringPresentation& P, int u, int v);

// All maximal nonzero paths starting at v, in depth-first declaration order.
// A path is maximal when no arrow extends it to another nonzero path. At most
// two on a string tree; prefix-contained duplicates are dropped.
std::vector<Path> maximal_nonzero_paths_from(const StringPresentation& P, int v);

// Dual: maximal nonzero paths ending at v (computed on the opposite quiver).
std::vector<Path> maximal_nonzero_paths_to(const StringPresentation& P, int v);

struct ValidationReport {
    bool admissible = false;  // relations have length >= 2, quiver is acyclic
    bool s1 = true;           // monomial by construction
    bool s2 = false;
    bool s3 = false;
    bool g1 = false;
    bool g2 = false;
    bool is_tree = false;
    std::vector<std::string> witnesses;  // human-readable failure notes

    bool is_string() const { return s1 && s2 && s3; }
    bool is_gentle() const { return is_string() && g1 && g2; }
    bool string_tree() const { return admissible && is_string() && is_tree; }
};

ValidationReport validate(const StringPresentation& P);

// Throws AxiomError unless P is an admissible string tree.
void require_string_tree(const StringPresentation& P);

StringPresentation parse_bqv(const std::string& text);
StringPresentation parse_bqv_file(const std::string& path);
std::string serialize_bqv(const StringPresentation& P);

}  // namespace relquiv
