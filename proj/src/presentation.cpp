#include "relquiv/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace relquiv {

void StringPresentation::rebuild_adjacency() {
    out_arrows.assign(vertex_names.size(), {});
    in_arrows.assign(vertex_names.size(), {});
    for (int i = 0; i < n_arrows(); ++i) {
        out_arrows[arrows[i].src].push_back(i);
        in_arrows[arrows[i].tgt].push_back(i);
    }
}

int StringPresentation::vertex_index(const std::string& name) const {
    for (int i = 0; i < n_vertices(); ++i)
        if (vertex_names[i] == name) return i;
    return -1;
}

int StringPresentation::arrow_index(const std::string& name) const {
    for (int i = 0; i < n_arrows(); ++i)
        if (arrows[i].name == name) return i;
    return -1;
}

bool StringPresentation::word_is_zero(const std::vector<int>& word) const {
    for (const auto& rel : relations) {
        if (rel.size() > word.size()) continue;
        for (size_t off = 0; off + rel.size() <= word.size(); ++off) {
            if (std::equal(rel.begin(), rel.end(), word.begin() + off)) return true;
        }
    }
    return false;
}

StringPresentation StringPresentation::opposite() const {
    StringPresentation Q;
    Q.vertex_names = vertex_names;
    Q.arrows.reserve(arrows.size());
    for (const Arrow& a : arrows) Q.arrows.push_back({a.name, a.tgt, a.src});
    Q.relations.reserve(relations.size());
    for (const auto& rel : relations) {
        std::vector<int> rev(rel.rbegin(), rel.rend());
        Q.relations.push_back(std::move(rev));
    }
    Q.rebuild_adjacency();
    return Q;
}

int Path::target(const StringPresentation& P) const {
    return arrows.empty() ? source : P.arrows[arrows.back()].tgt;
}

std::vector<int> Path::vertices(const StringPresentation& P) const {
    std::vector<int> vs{source};
    for (int a : arrows) vs.push_back(P.arrows[a].tgt);
    return vs;
}

Path stationary_path(int v) { return Path{v, {}}; }

bool path_nonzero(const StringPresentation& P, const Path& p) {
    return !P.word_is_zero(p.arrows);
}

std::optional<Path> compose(const StringPresentation& P, const Path& p, const Path& q) {
    if (p.target(P) != q.source)
        throw std::invalid_argument("compose: paths are not composable");
    Path r{p.source, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    if (P.word_is_zero(r.arrows)) return std::nullopt;
    return r;
}

std::string path_to_string(const StringPresentation& P, const Path& p) {
    if (p.stationary()) return "e(" + P.vertex_names[p.source] + ")";
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += " ";
        s += P.arrows[p.arrows[i]].name;
    }
    return s;
}

std::optional<Path> find_path(const StringPresentation& P, int u, int v) {
    // Tiny graphs: DFS over out-arrows, first hit wins (unique on trees).
    std::vector<int> word;
    std::vector<bool> seen(P.vertex_names.size(), false);
    std::function<bool(int)> dfs = [&](int w) -> bool {
        if (w == v) return true;
        seen[w] = true;
        for (int a : P.out_arrows[w]) {
            int t = P.arrows[a].tgt;
            if (seen[t]) continue;
            word.push_back(a);
            if (dfs(t)) return true;
            word.pop_back();
        }
        return false;
    };
    if (u < 0 || v < 0) return std::nullopt;
    if (!dfs(u)) return std::nullopt;
    return Path{u, word};
}

std::vector<Path> maximal_nonzero_paths_from(const StringPresentation& P, int v) {
    std::vector<Path> out;
    std::vector<int> word;
    int cap = P.n_arrows() + 1;
    std::function<void(int)> dfs = [&](int w) {
        if (static_cast<int>(word.size()) > cap)
            throw std::logic_error("maximal_nonzero_paths_from: cycle in quiver");
        bool extended = false;
        for (int a : P.out_arrows[w]) {
            word.push_back(a);
            if (!P.word_is_zero(word)) {
                extended = true;
                dfs(P.arrows[a].tgt);
            }
            word.pop_back();
        }
        if (!extended) out.push_back(Path{v, word});
    };
    dfs(v);
    // Drop paths that are prefixes of a longer kept path.
    std::vector<Path> keep;
    for (size_t i = 0; i < out.size(); ++i) {
        const Path& p = out[i];
        bool pref = false;
        for (size_t j = 0; j < out.size(); ++j) {
            if (j == i || p.arrows.size() >= out[j].arrows.size()) continue;
            if (std::equal(p.arrows.begin(), p.arrows.end(), out[j].arrows.begin())) {
                pref = true;
                break;
            }
        }
        if (!pref) keep.push_back(p);
    }
    return keep;
}

std::vector<Path> maximal_nonzero_paths_to(const StringPresentation& P, int v) {
    StringPresentation op = P.opposite();
    std::vector<Path> rev = maximal_nonzero_paths_from(op, v);
    std::vector<Path> out;
    for (const Path& p : rev) {
        Path q;
        q.source = p.target(op);
        q.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
        out.push_back(std::move(q));
    }
    return out;
}

namespace {

bool quiver_acyclic(const StringPresentation& P) {
    int n = P.n_vertices();
    std::vector<int> state(n, 0);
    std::function<bool(int)> dfs = [&](int v) -> bool {
        state[v] = 1;
        for (int a : P.out_arrows[v]) {
            int t = P.arrows[a].tgt;
            if (state[t] == 1) return false;
            if (state[t] == 0 && !dfs(t)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

bool underlying_tree(const StringPresentation& P) {
    int n = P.n_vertices();
    if (n == 0) return false;
    if (P.n_arrows() != n - 1) return false;
    // n-1 edges + connected => tree (multi-edges would disconnect the count).
    std::vector<std::vector<int>> adj(n);
    for (const Arrow& a : P.arrows) {
        adj[a.src].push_back(a.tgt);
        adj[a.tgt].push_back(a.src);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

}  // namespace

ValidationReport validate(const StringPresentation& P) {
    ValidationReport rep;
    rep.s1 = true;

    bool lengths_ok = true;
    for (const auto& rel : P.relations)
        if (rel.size() < 2) {
            lengths_ok = false;
            rep.witnesses.push_back("relation of length < 2");
        }
    bool acyclic = quiver_acyclic(P);
    if (!acyclic) rep.witnesses.push_back("directed cycle in quiver");
    rep.admissible = lengths_ok && acyclic;

    rep.s2 = true;
    for (int v = 0; v < P.n_vertices(); ++v) {
        if (P.out_arrows[v].size() > 2) {
            rep.s2 = false;
            rep.witnesses.push_back("vertex " + P.vertex_names[v] + " has out-degree > 2");
        }
        if (P.in_arrows[v].size() > 2) {
            rep.s2 = false;
            rep.witnesses.push_back("vertex " + P.vertex_names[v] + " has in-degree > 2");
        }
    }

    auto pair_nonzero = [&](int a, int b) {
        return !P.word_is_zero(std::vector<int>{a, b});
    };

    rep.s3 = true;
    rep.g1 = true;
    for (int a = 0; a < P.n_arrows(); ++a) {
        int live_fwd = 0, dead_fwd = 0;
        for (int b : P.out_arrows[P.arrows[a].tgt])
            (pair_nonzero(a, b) ? live_fwd : dead_fwd)++;
        int live_bwd = 0, dead_bwd = 0;
        for (int g : P.in_arrows[P.arrows[a].src])
            (pair_nonzero(g, a) ? live_bwd : dead_bwd)++;
        if (live_fwd > 1 || live_bwd > 1) {
            rep.s3 = false;
            rep.witnesses.push_back("arrow " + P.arrows[a].name + " has two nonzero continuations");
        }
        if (dead_fwd > 1 || dead_bwd > 1) {
            rep.g1 = false;
            rep.witnesses.push_back("arrow " + P.arrows[a].name + " has two vanishing continuations");
        }
    }

    rep.g2 = true;
    for (const auto& rel : P.relations)
        if (rel.size() != 2) {
            rep.g2 = false;
            rep.witnesses.push_back("relation of length != 2");
            break;
        }

    rep.is_tree = underlying_tree(P);
    if (!rep.is_tree) rep.witnesses.push_back("underlying graph is not a tree");
    return rep;
}

void require_string_tree(const StringPresentation& P) {
    ValidationReport rep = validate(P);
    if (!rep.string_tree()) {
        std::string msg = "input is not an admissible string tree";
        for (const auto& w : rep.witnesses) msg += "; " + w;
        throw AxiomError(msg);
    }
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

StringPresentation parse_bqv(const std::string& text) {
    StringPresentation P;
    std::istringstream iss(text);
    std::string line;
    int lineno = 0;
    bool have_vertices = false;
    auto err = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(iss, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.rfind("vertices:", 0) == 0) {
            if (have_vertices) err("duplicate vertices line");
            have_vertices = true;
            for (const auto& name : split_ws(t.substr(9))) {
                if (P.vertex_index(name) >= 0) err("duplicate vertex '" + name + "'");
                P.vertex_names.push_back(name);
            }
            if (P.vertex_names.empty()) err("empty vertex list");
        } else if (t.rfind("arrow ", 0) == 0) {
            if (!have_vertices) err("arrow before vertices line");
            size_t colon = t.find(':');
            if (colon == std::string::npos) err("missing ':' in arrow line");
            std::string name = trim(t.substr(6, colon - 6));
            if (name.empty()) err("missing arrow name");
            if (P.arrow_index(name) >= 0) err("duplicate arrow '" + name + "'");
            std::string rest = t.substr(colon + 1);
            size_t sep = rest.find("->");
            if (sep == std::string::npos) err("missing '->' in arrow line");
            std::string sname = trim(rest.substr(0, sep));
            std::string tname = trim(rest.substr(sep + 2));
            int s = P.vertex_index(sname);
            int tg = P.vertex_index(tname);
            if (s < 0) err("unknown vertex '" + sname + "'");
            if (tg < 0) err("unknown vertex '" + tname + "'");
            P.arrows.push_back({name, s, tg});
        } else if (t.rfind("relation:", 0) == 0) {
            if (!have_vertices) err("relation before vertices line");
            std::vector<int> word;
            for (const auto& name : split_ws(t.substr(9))) {
                int a = P.arrow_index(name);
                if (a < 0) err("unknown arrow '" + name + "'");
                word.push_back(a);
            }
            if (word.size() < 2) err("relation must have length >= 2");
            for (size_t i = 0; i + 1 < word.size(); ++i) {
                if (P.arrows[word[i]].tgt != P.arrows[word[i + 1]].src)
                    err("relation word is not a path");
            }
            P.relations.push_back(std::move(word));
        } else {
            err("unrecognized line '" + t + "'");
        }
    }
    if (!have_vertices) throw ParseError("missing vertices line");
    P.rebuild_adjacency();

    // Normalize the generating set: drop duplicates and any word containing
    // another generator as a proper subword.
    std::vector<std::vector<int>> norm;
    for (const auto& rel : P.relations) {
        bool dup = false;
        for (const auto& kept : norm)
            if (kept == rel) { dup = true; break; }
        if (!dup) norm.push_back(rel);
    }
    std::vector<std::vector<int>> minimal;
    for (const auto& rel : norm) {
        bool contains_other = false;
        for (const auto& other : norm) {
            if (other == rel || other.size() >= rel.size()) continue;
            for (size_t off = 0; off + other.size() <= rel.size(); ++off)
                if (std::equal(other.begin(), other.end(), rel.begin() + off)) {
                    contains_other = true;
                    break;
                }
            if (contains_other) break;
        }
        if (!contains_other) minimal.push_back(rel);
    }
    P.relations = std::move(minimal);
    return P;
}

StringPresentation parse_bqv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_bqv(buf.str());
}

std::string serialize_bqv(const StringPresentation& P) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : P.vertex_names) out << " " << v;
    out << "\n";
    for (const Arrow& a : P.arrows)
        out << "arrow " << a.name << ": " << P.vertex_names[a.src] << " -> "
            << P.vertex_names[a.tgt] << "\n";
    for (const auto& rel : P.relations) {
        out << "relation:";
        for (int a : rel) out << " " << P.arrows[a].name;
        out << "\n";
    }
    return out.str();
}

}  // namespace relquiv
