// Per-entry claim evaluation and report emission.  Reports are JSON lines:
// one meta line, then per entry one summary line followed by one line per
// claim (exactly the keys entry/claim_id/applicable/holds/witness, plus
// millis when timing is on).  A claim that fails while applicable makes the
// run exit nonzero; failures of structural claims (everything except the
// membership claim H) are flagged PAPER-REFUTING in the witness.
#pragma once

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "corpus.hpp"
#include "schmidt.hpp"

namespace hs {

inline constexpr const char* kToolName = "hsverify";
inline constexpr const char* kToolVersion = "0.1.0";

struct ClaimRow {
    std::string claim_id;
    bool applicable = true;
    bool holds = true;
    std::string witness;
    double millis = 0.0;
};

struct EntryReport {
    std::string name;
    std::int64_t order = 0;
    std::string factorization;
    bool nilpotent = false;
    std::optional<bool> in_h;
    std::int64_t schmidt_count = -1;  // -1 = unknown
    bool partial = false;
    double millis = 0.0;
    std::vector<ClaimRow> claims;
};

struct SuiteReport {
    RunConfig cfg;
    std::vector<EntryReport> entries;
    std::int64_t claim_rows = 0;
    bool any_failure = false;
};

namespace detail {

inline std::string claim_family(const std::string& id) {
    std::size_t dot = id.find('.');
    return dot == std::string::npos ? id : id.substr(0, dot);
}

inline bool family_wanted(const RunConfig& cfg, const std::string& family) {
    if (cfg.checks.empty()) return true;
    for (const std::string& c : cfg.checks)
        if (c == family) return true;
    return false;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline ClaimRow inapplicable_row(std::string id, std::string why) {
    ClaimRow r;
    r.claim_id = std::move(id);
    r.applicable = false;
    r.holds = true;
    r.witness = std::move(why);
    return r;
}

inline void push_rows(std::vector<ClaimRow>& out, const std::vector<ClaimVerdict>& vs,
                      double ms, const std::string& suffix = "") {
    for (const ClaimVerdict& v : vs) {
        ClaimRow r;
        r.claim_id = v.claim_id + suffix;
        r.applicable = v.applicable;
        r.holds = v.holds;
        r.witness = v.witness;
        r.millis = ms;
        out.push_back(std::move(r));
    }
}

inline void analyze_full(const CorpusEntry& e, const RunConfig& cfg, const Caps& caps,
                         EntryReport& r) {
    const Group& g = e.group;
    LatticeLimits lim{cfg.lattice_cap, 200000};
    LatticeView lat = all_subgroups(g, lim);
    LatticeFlags flags(lat);
    HClassResult h = h_class_membership(flags);
    r.in_h = h.in_class;
    r.schmidt_count = h.schmidt_count;

    if (family_wanted(cfg, "H")) {
        Stopwatch sw;
        ClaimRow row;
        row.claim_id = "H";
        row.applicable = true;
        row.holds = h.in_class.value();
        if (row.holds) {
            row.witness = "all " + std::to_string(h.schmidt_count) +
                          " Schmidt subgroup(s) are Hall subgroups";
        } else {
            row.witness = "Schmidt subgroup of order " +
                          std::to_string(h.violating_subgroup->order) +
                          " is not a Hall subgroup of a group of order " +
                          std::to_string(g.order());
        }
        row.millis = sw.ms();
        r.claims.push_back(std::move(row));
    }

    if (family_wanted(cfg, "L1")) {
        Stopwatch sw;
        std::vector<int> reps;
        for (int i : h.schmidt_indices)
            if (lat.classes[static_cast<std::size_t>(lat.class_of[static_cast<std::size_t>(i)])][0] == i)
                reps.push_back(i);
        if (reps.empty()) {
            for (int item = 1; item <= 7; ++item)
                r.claims.push_back(
                    inapplicable_row("L1." + std::to_string(item), "no Schmidt subgroups"));
        } else {
            for (std::size_t k = 0; k < reps.size(); ++k) {
                std::string suffix = "#s" + std::to_string(k + 1);
                Stopwatch one;
                try {
                    SchmidtCertificate cert =
                        schmidt_decomposition(g, lat.subgroups[static_cast<std::size_t>(reps[k])]);
                    std::vector<ClaimVerdict> vs =
                        verify_lemma1(g, lat, flags, reps[k], cert);
                    push_rows(r.claims, vs, one.ms(), suffix);
                } catch (const NotSchmidt& ex) {
                    for (int item = 1; item <= 7; ++item) {
                        ClaimRow row;
                        row.claim_id = "L1." + std::to_string(item) + suffix;
                        row.applicable = true;
                        row.holds = false;
                        row.witness = std::string("structural decomposition failed: ") +
                                      ex.what();
                        row.millis = one.ms();
                        r.claims.push_back(std::move(row));
                    }
                }
            }
        }
        (void)sw;
    }

    if (family_wanted(cfg, "L3")) {
        Stopwatch sw;
        try {
            ClaimVerdict v = verify_closure_lemma3(g, lat, flags, h, lim, caps);
            push_rows(r.claims, {v}, sw.ms());
        } catch (const HypothesisNotMet& ex) {
            r.claims.push_back(inapplicable_row("L3", ex.what()));
        }
    }

    if (family_wanted(cfg, "L4")) {
        Stopwatch sw;
        std::vector<ClaimVerdict> vs = verify_lemma4(g, lat, flags);
        push_rows(r.claims, vs, sw.ms());
    }

    if (family_wanted(cfg, "L5")) {
        Stopwatch sw;
        try {
            ClaimVerdict v = verify_lemma5(g, h, caps);
            push_rows(r.claims, {v}, sw.ms());
        } catch (const HypothesisNotMet& ex) {
            r.claims.push_back(inapplicable_row("L5", ex.what()));
        }
    }

    if (family_wanted(cfg, "L6")) {
        Stopwatch sw;
        try {
            ClaimVerdict v = verify_lemma6(g, lat, flags, h);
            push_rows(r.claims, {v}, sw.ms());
        } catch (const HypothesisNotMet& ex) {
            r.claims.push_back(inapplicable_row("L6", ex.what()));
        }
    }

    if (family_wanted(cfg, "T")) {
        Stopwatch sw;
        try {
            std::vector<ClaimVerdict> vs = verify_theorem(g, lat, flags, h, caps);
            push_rows(r.claims, vs, sw.ms());
        } catch (const HypothesisNotMet& ex) {
            for (int item = 1; item <= 4; ++item)
                r.claims.push_back(
                    inapplicable_row("T." + std::to_string(item), ex.what()));
        }
    }

    if (family_wanted(cfg, "COR")) {
        Stopwatch sw;
        try {
            ClaimVerdict v = verify_corollary(g, lat, flags, h, caps);
            push_rows(r.claims, {v}, sw.ms());
        } catch (const HypothesisNotMet& ex) {
            r.claims.push_back(inapplicable_row("COR", ex.what()));
        }
    }
}

inline void analyze_partial(const CorpusEntry& e, const RunConfig& cfg, EntryReport& r) {
    const Group& g = e.group;
    LatticeLimits lim{cfg.lattice_cap, 200000};
    HClassResult h = h_class_membership(g, lim);
    r.in_h = h.in_class;
    r.schmidt_count = h.schmidt_count;

    if (family_wanted(cfg, "H")) {
        ClaimRow row;
        row.claim_id = "H";
        if (h.in_class.has_value()) {
            row.applicable = true;
            row.holds = *h.in_class;
            row.witness = r.nilpotent
                              ? "nilpotent group: no Schmidt subgroups"
                              : "the group is itself a Schmidt group, its own Hall "
                                "Schmidt subgroup";
        } else {
            row.applicable = false;
            row.holds = true;
            row.witness = "subgroup lattice capped";
        }
        r.claims.push_back(std::move(row));
    }
    auto capped = [&](const std::string& id) {
        r.claims.push_back(inapplicable_row(id, "subgroup lattice capped"));
    };
    if (family_wanted(cfg, "L1"))
        for (int item = 1; item <= 7; ++item) capped("L1." + std::to_string(item));
    if (family_wanted(cfg, "L3")) capped("L3");
    if (family_wanted(cfg, "L4"))
        for (int item = 1; item <= 3; ++item) capped("L4." + std::to_string(item));
    if (family_wanted(cfg, "L5")) capped("L5");
    if (family_wanted(cfg, "L6")) capped("L6");
    if (family_wanted(cfg, "T"))
        for (int item = 1; item <= 4; ++item) capped("T." + std::to_string(item));
    if (family_wanted(cfg, "COR")) capped("COR");
}

inline void analyze_example2(const CorpusEntry& e, const RunConfig& cfg,
                             EntryReport& r) {
    const Example2& ex = *e.ex2;
    const Group& g = e.group;
    r.in_h = std::nullopt;
    r.schmidt_count = -1;

    if (family_wanted(cfg, "H")) {
        ClaimRow row;
        row.claim_id = "H";
        row.applicable = false;
        row.holds = true;
        row.witness = "subgroup lattice capped; targeted structural checks follow";
        r.claims.push_back(std::move(row));
    }

    auto schmidt_row = [&](const SubgroupSet& sub, std::int64_t top_prime) {
        Stopwatch sw;
        ClaimRow row;
        row.claim_id = "E2.schmidt#q" + std::to_string(top_prime);
        std::optional<SchmidtCertificate> cert = is_schmidt_structural(g, sub);
        row.holds = cert.has_value() && cert->p == ex.params.p && cert->q == top_prime;
        row.witness =
            row.holds
                ? "order " + std::to_string(sub.order) + " decomposes with p=" +
                      std::to_string(cert->p) + ", q=" + std::to_string(cert->q) +
                      ", m=" + std::to_string(cert->m)
                : "no Schmidt decomposition with the expected primes";
        row.millis = sw.ms();
        r.claims.push_back(std::move(row));
    };
    auto hall_row = [&](const SubgroupSet& sub, std::int64_t top_prime) {
        ClaimRow row;
        row.claim_id = "E2.hall#q" + std::to_string(top_prime);
        row.holds = is_hall_in(sub, g.order());
        row.witness = "order " + std::to_string(sub.order) + " against group order " +
                      std::to_string(g.order());
        r.claims.push_back(std::move(row));
    };
    schmidt_row(ex.pq_sub, ex.params.q);
    hall_row(ex.pq_sub, ex.params.q);
    schmidt_row(ex.pr_sub, ex.params.r);
    hall_row(ex.pr_sub, ex.params.r);
    {
        Stopwatch sw;
        ClaimRow row;
        row.claim_id = "E2.center";
        SubgroupSet z = center(g);
        row.holds = z.mask == ex.phi_p.mask;
        row.witness = "center has order " + std::to_string(z.order) +
                      (row.holds ? ", equal to the base-center subgroup"
                                 : ", differs from the base-center subgroup");
        row.millis = sw.ms();
        r.claims.push_back(std::move(row));
    }
    {
        Stopwatch sw;
        ClaimRow row;
        row.claim_id = "E2.nilpotent";
        std::int64_t want = ex.params.p * ex.params.q * ex.params.r;
        row.holds = ex.nilpotent_part.order == want &&
                    is_nilpotent_sub(ex.nilpotent_part);
        row.witness = "order " + std::to_string(ex.nilpotent_part.order) +
                      " (expected " + std::to_string(want) + ")";
        row.millis = sw.ms();
        r.claims.push_back(std::move(row));
    }
}

}  // namespace detail

inline EntryReport analyze_entry(const CorpusEntry& e, const RunConfig& cfg) {
    detail::Stopwatch sw;
    Caps caps;
    caps.element_cap = cfg.element_cap;
    EntryReport r;
    r.name = e.name;
    r.order = e.group.order();
    r.factorization = factorize(r.order).to_string();
    r.nilpotent = is_nilpotent(e.group);
    r.partial = e.partial;
    if (e.example2_mode) detail::analyze_example2(e, cfg, r);
    else if (e.partial) detail::analyze_partial(e, cfg, r);
    else detail::analyze_full(e, cfg, caps, r);
    // flag structure-claim failures; a failing H just records non-membership
    for (ClaimRow& row : r.claims)
        if (row.claim_id != "H" && row.applicable && !row.holds)
            row.witness = "PAPER-REFUTING: " + row.witness;
    r.millis = sw.ms();
    return r;
}

inline SuiteReport run_suite(const std::vector<CorpusEntry>& corpus,
                             const RunConfig& cfg) {
    SuiteReport rep;
    rep.cfg = cfg;
    rep.entries.resize(corpus.size());
    int jobs = std::max(1, std::min<int>(cfg.jobs, int(corpus.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            rep.entries[i] = analyze_entry(corpus[i], cfg);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= corpus.size()) break;
                        rep.entries[i] = analyze_entry(corpus[i], cfg);
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        for (std::thread& th : pool) th.join();
        for (const std::exception_ptr& ep : errors)
            if (ep) std::rethrow_exception(ep);
    }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const EntryReport& a, const EntryReport& b) { return a.name < b.name; });
    for (const EntryReport& e : rep.entries) {
        rep.claim_rows += std::int64_t(e.claims.size());
        for (const ClaimRow& c : e.claims)
            if (c.applicable && !c.holds) rep.any_failure = true;
    }
    return rep;
}

inline void write_json_report(std::ostream& os, const SuiteReport& rep) {
    using json = nlohmann::ordered_json;
    json meta;
    meta["type"] = "meta";
    meta["tool"] = kToolName;
    meta["version"] = kToolVersion;
    json cfg;
    cfg["corpus"] = rep.cfg.default_corpus ? "default" : "custom";
    cfg["format"] = rep.cfg.format;
    cfg["jobs"] = rep.cfg.jobs;
    cfg["lattice_cap"] = rep.cfg.lattice_cap;
    cfg["element_cap"] = rep.cfg.element_cap;
    cfg["checks"] = rep.cfg.checks.empty() ? known_checks() : rep.cfg.checks;
    cfg["timing"] = rep.cfg.timing;
    cfg["entries"] = rep.entries.size();
    meta["config"] = cfg;
    os << meta.dump() << "\n";
    for (const EntryReport& e : rep.entries) {
        json line;
        line["type"] = "entry";
        line["entry"] = e.name;
        line["order"] = e.order;
        line["factorization"] = e.factorization;
        line["nilpotent"] = e.nilpotent;
        if (e.in_h.has_value()) line["in_h"] = *e.in_h;
        else line["in_h"] = nullptr;
        if (e.schmidt_count >= 0) line["schmidt_count"] = e.schmidt_count;
        else line["schmidt_count"] = nullptr;
        line["partial"] = e.partial;
        if (rep.cfg.timing) line["millis"] = e.millis;
        os << line.dump() << "\n";
        for (const ClaimRow& c : e.claims) {
            json cl;
            cl["entry"] = e.name;
            cl["claim_id"] = c.claim_id;
            cl["applicable"] = c.applicable;
            cl["holds"] = c.holds;
            cl["witness"] = c.witness;
            if (rep.cfg.timing) cl["millis"] = c.millis;
            os << cl.dump() << "\n";
        }
    }
}

inline void write_text_report(std::ostream& os, const SuiteReport& rep) {
    os << kToolName << " " << kToolVersion << " (" << rep.entries.size()
       << " entries)\n";
    for (const EntryReport& e : rep.entries) {
        os << "entry " << e.name << ": order=" << e.order << " (" << e.factorization
           << ")"
           << " nilpotent=" << (e.nilpotent ? "yes" : "no") << " in_class="
           << (e.in_h.has_value() ? (*e.in_h ? "yes" : "no") : "unknown");
        if (e.schmidt_count >= 0) os << " schmidt_subgroups=" << e.schmidt_count;
        if (e.partial) os << " [partial]";
        if (rep.cfg.timing) os << " (" << e.millis << " ms)";
        os << "\n";
        for (const ClaimRow& c : e.claims) {
            os << "  [" << (!c.applicable ? "n/a " : c.holds ? "pass" : "FAIL") << "] "
               << c.claim_id << ": " << c.witness;
            if (rep.cfg.timing) os << " (" << c.millis << " ms)";
            os << "\n";
        }
    }
}

inline void write_report(std::ostream& os, const SuiteReport& rep) {
    if (rep.cfg.format == "text") write_text_report(os, rep);
    else write_json_report(os, rep);
}

inline int exit_code(const SuiteReport& rep) { return rep.any_failure ? 1 : 0; }

}  // namespace hs
