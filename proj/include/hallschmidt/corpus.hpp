// Run configuration and corpus assembly for the verifier.  The default
// corpus mixes parameterized families (cyclic, dihedral, ...), distinguished
// single groups, and the subgroup-conjugacy-class representatives of the
// symmetric groups on 5 and 6 points, deduplicated by (order, element-order
// statistics).  A config file can replace or extend it.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "io.hpp"
#include "lattice.hpp"

namespace hs {

struct RunConfig {
    bool default_corpus = true;
    bool corpus_key_seen = false;  // an explicit `corpus =` line wins
    std::vector<ConstructionSpec> constructions;
    std::vector<std::string> load_files;
    std::string format = "json";  // json | text
    std::string out;              // empty = stdout
    int jobs = 1;
    std::int64_t lattice_cap = 2500;
    std::int64_t element_cap = 500000;
    std::vector<std::string> checks;  // subset of known_checks(); empty = all
    bool timing = false;
};

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> c = {"H",  "L1", "L3", "L4",
                                               "L5", "L6", "T",  "COR"};
    return c;
}

inline void validate_checks(const std::vector<std::string>& checks) {
    for (const std::string& c : checks) {
        bool ok = false;
        for (const std::string& k : known_checks()) ok = ok || k == c;
        if (!ok) throw ConfigError("unknown check '" + c + "'");
    }
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Config file grammar: blank lines and '#' comments ignored; `key = value`
// lines set options (corpus, format, out, jobs, lattice_cap, element_cap,
// checks, timing, load); any other nonblank line is a construction spec.
// Construction or load lines replace the default corpus unless `corpus =
// default` is also present.
inline RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed;
        {
            std::size_t a = line.find_first_not_of(" \t");
            if (a == std::string::npos) continue;
            std::size_t b = line.find_last_not_of(" \t");
            trimmed = line.substr(a, b - a + 1);
        }
        std::size_t eq = trimmed.find('=');
        bool looks_like_kv = eq != std::string::npos && trimmed.find('(') > eq;
        if (!looks_like_kv) {
            cfg.constructions.push_back(parse_construction(trimmed));
            continue;
        }
        auto strip = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t");
            if (a == std::string::npos) return std::string();
            std::size_t b = s.find_last_not_of(" \t");
            return s.substr(a, b - a + 1);
        };
        std::string key = strip(trimmed.substr(0, eq));
        std::string value = strip(trimmed.substr(eq + 1));
        auto as_int = [&](const std::string& v) {
            try {
                std::size_t used = 0;
                std::int64_t r = std::stoll(v, &used);
                if (used != v.size()) throw std::invalid_argument(v);
                return r;
            } catch (const std::exception&) {
                throw ConfigError("line " + std::to_string(lineno) + ": '" + v +
                                  "' is not an integer");
            }
        };
        if (key == "corpus") {
            if (value != "default" && value != "none")
                throw ConfigError("corpus must be 'default' or 'none'");
            cfg.default_corpus = value == "default";
            cfg.corpus_key_seen = true;
        } else if (key == "format") {
            if (value != "json" && value != "text")
                throw ConfigError("format must be 'json' or 'text'");
            cfg.format = value;
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "jobs") {
            std::int64_t j = as_int(value);
            if (j < 1 || j > 256) throw ConfigError("jobs out of range");
            cfg.jobs = int(j);
        } else if (key == "lattice_cap") {
            std::int64_t v = as_int(value);
            if (v < 1) throw ConfigError("lattice_cap must be positive");
            cfg.lattice_cap = v;
        } else if (key == "element_cap") {
            std::int64_t v = as_int(value);
            if (v < 1) throw ConfigError("element_cap must be positive");
            cfg.element_cap = v;
        } else if (key == "checks") {
            cfg.checks = split_list(value);
            validate_checks(cfg.checks);
        } else if (key == "timing") {
            if (value == "1" || value == "true") cfg.timing = true;
            else if (value == "0" || value == "false") cfg.timing = false;
            else throw ConfigError("timing must be true/false/1/0");
        } else if (key == "load") {
            if (value.empty()) throw ConfigError("load needs a path");
            cfg.load_files.push_back(value);
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" +
                              key + "'");
        }
    }
    if (!cfg.corpus_key_seen &&
        (!cfg.constructions.empty() || !cfg.load_files.empty()))
        cfg.default_corpus = false;
    return cfg;
}

struct CorpusEntry {
    std::string name;
    std::string description;
    Group group;
    bool partial = false;          // over the lattice cap: shortcut analysis only
    bool example2_mode = false;    // targeted structural checks instead
    std::optional<Example2> ex2;   // present when example2_mode
};

namespace detail {

using StatsKey = std::pair<std::int64_t, std::vector<std::pair<std::int32_t, std::int64_t>>>;

class CorpusBuilder {
public:
    CorpusBuilder(const RunConfig& cfg, const Caps& caps)
        : cfg_(cfg), caps_(caps) {}

    // dedupe = true for the default corpus; config-requested entries are
    // always kept as given
    void add(std::string name, std::string desc, Group g, bool dedupe) {
        if (dedupe) {
            StatsKey key{g.order(), order_statistics(g)};
            if (!seen_.insert(key).second) return;
        }
        CorpusEntry e;
        e.name = unique_name(std::move(name));
        e.description = std::move(desc);
        e.partial = g.order() > cfg_.lattice_cap;
        e.group = std::move(g);
        entries_.push_back(std::move(e));
    }

    std::string unique_name(std::string name) {
        int& n = names_[name];
        ++n;
        if (n == 1) return name;
        return name + "-" + std::to_string(n);
    }

    void add_example2(std::int64_t p, std::int64_t q, std::int64_t r) {
        Example2 ex = example2_analog(p, q, r, caps_);
        CorpusEntry e;
        e.name = unique_name("example2-" + std::to_string(p) + "-" + std::to_string(q) +
                             "-" + std::to_string(r));
        e.description = "extraspecial base of order " + std::to_string(p) +
                        "^3 under a fixed-point-free cyclic action of order " +
                        std::to_string(q * r);
        e.group = ex.t;
        e.partial = ex.t.order() > cfg_.lattice_cap;
        e.example2_mode = true;
        e.ex2 = std::move(ex);
        entries_.push_back(std::move(e));
    }

    std::vector<CorpusEntry> take() { return std::move(entries_); }

    const RunConfig& cfg_;
    const Caps& caps_;

private:
    std::vector<CorpusEntry> entries_;
    std::set<StatsKey> seen_;
    std::map<std::string, int> names_;
};

inline std::string two_digits(int v) {
    std::ostringstream os;
    if (v < 10) os << '0';
    os << v;
    return os.str();
}

inline void add_symmetric_classes(CorpusBuilder& b, int degree) {
    Group s = symmetric_group(degree, b.caps_);
    LatticeView lat = all_subgroups(s, {s.order(), 200000});
    for (std::size_t c = 0; c < lat.classes.size(); ++c) {
        const SubgroupSet& rep = lat.subgroups[static_cast<std::size_t>(lat.classes[c][0])];
        Group g = as_group(rep, b.caps_).group;
        std::ostringstream name, desc;
        name << "s" << degree << "-class-" << two_digits(int(c)) << "-order-"
             << rep.order;
        desc << "subgroup class " << c << " of the symmetric group on " << degree
             << " points, order " << rep.order;
        b.add(name.str(), desc.str(), std::move(g), true);
    }
}

inline void add_default_corpus(CorpusBuilder& b) {
    const Caps& caps = b.caps_;
    for (int n = 1; n <= 60; ++n)
        b.add("cyclic-" + std::to_string(n), "cyclic group of order " + std::to_string(n),
              cyclic_group(n, caps), true);
    for (int n = 3; n <= 30; ++n)
        b.add("dihedral-" + std::to_string(n),
              "dihedral group of order " + std::to_string(2 * n),
              dihedral_group(n, caps), true);
    b.add("a4", "alternating group on 4 points", alternating_group(4, caps), true);
    b.add("s4", "symmetric group on 4 points", symmetric_group(4, caps), true);
    b.add("a5", "alternating group on 5 points", alternating_group(5, caps), true);
    b.add("sl23",
          "2x2 matrices of determinant 1 over F_3",
          build_from_matrices(2, 3, {{1, 1, 0, 1}, {0, 2, 1, 0}}, caps), true);
    b.add("heisenberg-3", "upper unitriangular 3x3 group over F_3",
          heisenberg_group(3, caps), true);
    b.add("heisenberg-5", "upper unitriangular 3x3 group over F_5",
          heisenberg_group(5, caps), true);
    b.add("heis5-by-z3",
          "extraspecial group of order 125 under an order-3 action",
          heisenberg_semidirect(5, 3, mat_pow(primitive_companion(2, 5), 8), caps),
          true);
    b.add("z3-by-z4", "cyclic 3 extended by a cyclic 4 acting by inversion",
          cyclic_semidirect_cyclic(3, 4, 2, caps), true);
    for (int k = 1; k <= 3; ++k)
        b.add("example3-" + std::to_string(k),
              "elementary-abelian tower stage " + std::to_string(k) +
                  " under a cyclic order-3 action",
              example3_group(k, false, caps), true);
    b.add("a4xz5", "direct product of the alternating group on 4 points and cyclic 5",
          direct_product(alternating_group(4, caps), cyclic_group(5, caps), caps),
          true);
    {
        Remark1 r = remark1_counterexample(caps);
        b.add("remark1-s3", "first factor of the non-closure example", r.a, true);
        b.add("remark1-z2", "second factor of the non-closure example", r.b, true);
        b.add("remark1-product", "product with a non-Hall Schmidt subgroup",
              r.product, true);
    }
    b.add("gl-2-2", "invertible 2x2 matrices over F_2", general_linear_group(2, 2, caps),
          true);
    b.add("gl-2-3", "invertible 2x2 matrices over F_3", general_linear_group(2, 3, caps),
          true);
    b.add("gl-2-5", "invertible 2x2 matrices over F_5", general_linear_group(2, 5, caps),
          true);
    b.add("gl-3-2", "invertible 3x3 matrices over F_2", general_linear_group(3, 2, caps),
          true);
    b.add_example2(29, 3, 5);
    add_symmetric_classes(b, 5);
    add_symmetric_classes(b, 6);
}

inline std::string spec_entry_name(const ConstructionSpec& spec) {
    std::string name = spec.kind;
    for (std::int64_t p : spec.params) name += "-" + std::to_string(p);
    return name;
}

inline std::string file_entry_name(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return base.empty() ? "file" : base;
}

}  // namespace detail

inline std::vector<CorpusEntry> generate_corpus(const RunConfig& cfg) {
    Caps caps;
    caps.element_cap = cfg.element_cap;
    detail::CorpusBuilder b(cfg, caps);
    if (cfg.default_corpus) detail::add_default_corpus(b);
    for (const ConstructionSpec& spec : cfg.constructions) {
        if (spec.kind == "remark1") {
            Remark1 r = remark1_counterexample(caps);
            b.add("remark1-s3", "first factor of the non-closure example", r.a, false);
            b.add("remark1-z2", "second factor of the non-closure example", r.b, false);
            b.add("remark1-product", "product with a non-Hall Schmidt subgroup",
                  r.product, false);
        } else if (spec.kind == "example2_analog") {
            if (spec.params.size() != 3)
                throw ConfigError("example2_analog takes 3 arguments");
            b.add_example2(spec.params[0], spec.params[1], spec.params[2]);
        } else {
            b.add(detail::spec_entry_name(spec), "configured construction",
                  build_construction(spec, caps), false);
        }
    }
    for (const std::string& path : cfg.load_files)
        b.add(detail::file_entry_name(path), "loaded from " + path,
              read_group_file(path, caps), false);
    return b.take();
}

}  // namespace hs
