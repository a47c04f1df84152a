// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "hallschmidt/report.hpp"
#include "support/brute.hpp"

using namespace hs;

namespace {

int g_failures = 0;

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw CheckFailure(msg);
}

template <typename T, typename U>
void expect_eq(const T& actual, const U& want, const std::string& label) {
    std::ostringstream a, w;
    a << actual;
    w << want;
    if (a.str() != w.str())
        throw CheckFailure(label + ": got " + a.str() + ", want " + w.str());
}

template <typename F>
void criterion(int n, const std::string& title, F&& body) {
    try {
        body();
        std::cout << "PASS criterion " << n << ": " << title << std::endl;
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "FAIL criterion " << n << ": " << title << " -- " << e.what()
                  << std::endl;
    }
}

// --- shared fixtures, built once ---------------------------------------------

const std::vector<CorpusEntry>& corpus() {
    static std::vector<CorpusEntry> c = generate_corpus(RunConfig{});
    return c;
}

const SuiteReport& suite() {
    static SuiteReport rep = run_suite(corpus(), RunConfig{});
    return rep;
}

// full analysis of a group, holding the lattice alive for the flags
struct Analyzed {
    Group g;
    LatticeView lat;
    LatticeFlags flags;
    HClassResult h;
    explicit Analyzed(Group grp)
        : g(std::move(grp)), lat(all_subgroups(g)), flags(lat), h(h_class_membership(flags)) {}
    Analyzed(const Analyzed&) = delete;
    Analyzed& operator=(const Analyzed&) = delete;
};

Analyzed& tower_member() {
    static std::optional<Analyzed> memo;
    if (!memo) memo.emplace(example3_group(3));
    return *memo;
}

const EntryReport& entry_named(const std::string& name) {
    for (const EntryReport& e : suite().entries)
        if (e.name == name) return e;
    throw CheckFailure("no corpus entry named '" + name + "'");
}

const ClaimRow& row_of(const EntryReport& e, const std::string& claim_id) {
    for (const ClaimRow& c : e.claims)
        if (c.claim_id == claim_id) return c;
    throw CheckFailure("entry " + e.name + " has no claim row " + claim_id);
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// every applicable row whose claim id starts with `prefix` must hold
int require_family_holds(const std::string& prefix) {
    int applicable = 0;
    std::ostringstream bad;
    for (const EntryReport& e : suite().entries)
        for (const ClaimRow& c : e.claims) {
            if (c.claim_id.rfind(prefix, 0) != 0 || !c.applicable) continue;
            ++applicable;
            if (!c.holds) bad << " " << e.name << "/" << c.claim_id;
        }
    expect(bad.str().empty(), "failing rows:" + bad.str());
    return applicable;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

// --- criteria ----------------------------------------------------------------

static void criterion1() {
    Remark1 r = remark1_counterexample();
    auto verdict = [](const Group& g) {
        LatticeView lat = all_subgroups(g);
        LatticeFlags flags(lat);
        return h_class_membership(flags);
    };
    HClassResult a = verdict(r.a);
    expect(a.in_class == true, "first factor should be a member");
    HClassResult b = verdict(r.b);
    expect(b.in_class == true, "second factor should be a member");
    HClassResult p = verdict(r.product);
    expect(p.in_class == false, "product should not be a member");
    expect(p.violating_subgroup.has_value(), "missing violating subgroup");
    expect_eq(p.violating_subgroup->order, 6, "violating subgroup order");
    expect(!is_hall_in(*p.violating_subgroup, r.product.order()),
           "violating subgroup should not be a Hall subgroup");
}

static void criterion2() {
    int applicable = require_family_holds("L1.");
    expect(applicable > 100, "expected a substantial number of applicable anatomy rows, got " +
                                 std::to_string(applicable));

    // spot-check decompositions of specific corpus members
    auto cert_of = [](const Group& g) {
        return schmidt_decomposition(g, full_subgroup(g));
    };
    SchmidtCertificate d5 = cert_of(dihedral_group(5));
    expect(d5.p == 5 && d5.q == 2 && d5.m == 1, "dihedral-5 decomposition");
    SchmidtCertificate d7 = cert_of(dihedral_group(7));
    expect(d7.p == 7 && d7.q == 2 && d7.m == 1, "dihedral-7 decomposition");
    SchmidtCertificate hz =
        cert_of(heisenberg_semidirect(5, 3, mat_pow(primitive_companion(2, 5), 8)));
    expect(hz.p == 5 && hz.q == 3 && hz.m == 2, "extraspecial-base decomposition");
    expect_eq(hz.p_part.order, 125, "extraspecial-base normal part order");

    // an order-75 Schmidt subgroup inside the two-block tower group
    {
        Group g2 = example3_group(2);
        LatticeView lat2 = all_subgroups(g2);
        bool found = false;
        for (const SubgroupSet& s : lat2.subgroups) {
            if (s.order != 75) continue;
            std::optional<SchmidtCertificate> c = is_schmidt_structural(g2, s);
            if (c && c->p == 5 && c->q == 3 && c->m == 2) found = true;
        }
        expect(found, "no order-75 Schmidt subgroup with the expected shape");
    }
    // an order-21 Schmidt subgroup inside the three-block tower group
    {
        Analyzed& t = tower_member();
        bool found = false;
        for (const SubgroupSet& s : t.lat.subgroups) {
            if (s.order != 21) continue;
            std::optional<SchmidtCertificate> c = is_schmidt_structural(t.g, s);
            if (c && c->p == 7 && c->q == 3 && c->m == 1) found = true;
        }
        expect(found, "no order-21 Schmidt subgroup with the expected shape");
    }
}

static void criterion3() {
    int applicable = require_family_holds("T.");
    expect(applicable > 20, "expected many applicable structure rows, got " +
                                std::to_string(applicable));
    const ClaimRow& sl = row_of(entry_named("sl23"), "T.2");
    expect(sl.applicable && sl.holds, "sl23 T.2 should hold");
    expect(contains(sl.witness, "nonabelian-branch"),
           "sl23 T.2 witness should name the nonabelian branch: " + sl.witness);
    const ClaimRow& a4 = row_of(entry_named("a4"), "T.4");
    expect(a4.applicable && a4.holds, "a4 T.4 should hold");
    expect(contains(a4.witness, "A of order 4"),
           "a4 T.4 witness should name the Fitting subgroup: " + a4.witness);
}

static void criterion4() {
    int applicable = require_family_holds("COR");
    expect(applicable >= 15, "expected one applicable row per non-nilpotent member, got " +
                                 std::to_string(applicable));
    const ClaimRow& sl = row_of(entry_named("sl23"), "COR");
    expect(sl.applicable && sl.holds, "sl23 COR should hold");
    expect(contains(sl.witness, "H of order 8"),
           "sl23 witness should pick the quaternion Hall subgroup: " + sl.witness);
}

static void criterion5() {
    int l5 = require_family_holds("L5");
    int l6 = require_family_holds("L6");
    expect(l5 > 20 && l6 > 20, "expected many applicable rows, got L5=" +
                                   std::to_string(l5) + " L6=" + std::to_string(l6));
    const EntryReport& a5 = entry_named("a5");
    expect(a5.in_h == false, "a5 should not be a member");
    expect(!row_of(a5, "L5").applicable, "L5 should not apply to a non-member");
    expect(!has_sylow_tower(alternating_group(5)).has_value(),
           "the alternating group on 5 points must not get a Sylow tower");
    const ClaimRow& prod = row_of(entry_named("a4xz5"), "L5");
    expect(prod.applicable && prod.holds && contains(prod.witness, "5 2 3"),
           "a4xz5 tower should run 5,2,3 bottom-up: " + prod.witness);
}

static void criterion6() {
    struct Case {
        int n;
        std::int64_t p;
        std::vector<std::int64_t> pi;
        std::int64_t hall;
    };
    for (Case c : std::vector<Case>{{2, 2, {3}, 3},
                                    {2, 3, {}, 1},
                                    {2, 5, {3}, 3},
                                    {3, 2, {7}, 7},
                                    {2, 7, {}, 1}}) {
        std::string tag = "GL(" + std::to_string(c.n) + "," + std::to_string(c.p) + ") ";
        Lemma7Data d = lemma7_data(c.n, c.p);
        expect(d.pi == c.pi, tag + "wrong prime set");
        expect_eq(d.hall_order, c.hall, tag + "Hall order");
        expect_eq(mat_order(d.singer, d.singer_order), d.singer_order,
                  tag + "cycle generator order");
        Group gl = general_linear_group(c.n, c.p);
        Elem cyc = -1;
        for (std::int64_t x = 0; x < gl.order(); ++x)
            if (gl.element_order(Elem(x)) == d.singer_order) cyc = Elem(x);
        expect(cyc >= 0, tag + "no element of the full cycle order");
        Elem h = gl.power(cyc, d.singer_order / d.hall_order);
        expect_eq(gl.element_order(h), d.hall_order, tag + "power order");
        SubgroupSet sub = closure(gl, {h});
        expect_eq(sub.order, d.hall_order, tag + "subgroup order");
        expect(is_cyclic_sub(sub), tag + "subgroup should be cyclic");
        expect(is_hall_in(sub, gl.order()), tag + "subgroup should be Hall");
    }
}

static void criterion7() {
    Analyzed& t = tower_member();
    expect_eq(t.g.order(), 2100, "group order");
    expect_eq(t.lat.subgroups.size(), 1120, "subgroup count");
    expect(t.h.in_class == true, "should be a member");
    expect_eq(t.h.schmidt_count, 303, "Schmidt subgroup count");
    std::map<std::int64_t, int> hist;
    for (int i : t.h.schmidt_indices) ++hist[t.lat.subgroups[static_cast<std::size_t>(i)].order];
    expect(hist == std::map<std::int64_t, int>{{12, 175}, {21, 100}, {75, 28}},
           "Schmidt subgroup order histogram is off");
    for (const ClaimVerdict& v : verify_theorem(t.g, t.lat, t.flags, t.h, {}))
        expect(!v.applicable || v.holds, "structure claim " + v.claim_id +
                                             " failed: " + v.witness);
    ClaimVerdict cor = verify_corollary(t.g, t.lat, t.flags, t.h, {});
    expect(cor.holds && contains(cor.witness, "H of order 700"),
           "complement witness: " + cor.witness);
    ClaimVerdict l5 = verify_lemma5(t.g, t.h, {});
    expect(l5.holds && contains(l5.witness, "7 5 2 3"), "tower witness: " + l5.witness);
}

static void criterion8() {
    Example2Search search = example2_minimal_search();
    expect_eq(search.first, 29, "least admissible prime");
    for (std::size_t i = 0; i + 1 < search.tried.size(); ++i)
        expect(search.tried[i].second.size() < 2,
               "prime " + std::to_string(search.tried[i].first) +
                   " should not admit two odd divisors");

    const EntryReport& e = entry_named("example2-29-3-5");
    expect(e.partial, "targeted entry should be analyzed in partial mode");
    expect(!row_of(e, "H").applicable, "membership must stay undecided");
    for (const char* id :
         {"E2.schmidt#q3", "E2.hall#q3", "E2.schmidt#q5", "E2.hall#q5", "E2.center",
          "E2.nilpotent"}) {
        const ClaimRow& c = row_of(e, id);
        expect(c.applicable && c.holds, std::string(id) + " failed: " + c.witness);
    }

    const CorpusEntry* ce = nullptr;
    for (const CorpusEntry& cand : corpus())
        if (cand.name == "example2-29-3-5") ce = &cand;
    expect(ce != nullptr && ce->ex2.has_value(), "corpus entry misses targeted data");
    const Example2& ex = *ce->ex2;
    expect_eq(ex.t.order(), 365835, "group order");
    expect_eq(ex.p_part.order, 24389, "extraspecial part order");
    expect_eq(ex.phi_p.order, 29, "central subgroup order");
    expect_eq(ex.pq_sub.order, 73167, "first Hall Schmidt subgroup order");
    expect_eq(ex.pr_sub.order, 121945, "second Hall Schmidt subgroup order");
    expect(is_hall_in(ex.pq_sub, ex.t.order()), "first subgroup should be Hall");
    expect(is_hall_in(ex.pr_sub, ex.t.order()), "second subgroup should be Hall");
    expect_eq(ex.nilpotent_part.order, 435, "nilpotent complement-of-center order");
    expect(is_nilpotent_sub(ex.nilpotent_part), "order-435 subgroup should be nilpotent");
}

static void criterion9() {
    int brute_checked = 0, counted = 0;
    for (const CorpusEntry& e : corpus()) {
        if (e.example2_mode || e.group.order() > 300) continue;
        const Group& g = e.group;
        Analyzed a(g);
        if (g.order() <= 24) {
            std::set<std::vector<Elem>> brute = hs::test::brute_subgroup_members(g);
            std::set<std::vector<Elem>> latset;
            for (const SubgroupSet& s : a.lat.subgroups) {
                std::vector<Elem> members;
                s.mask.for_each([&](std::size_t i) { members.push_back(Elem(i)); });
                latset.insert(members);
            }
            expect(latset == brute, e.name + ": lattice disagrees with brute force");
            ++brute_checked;
        }
        for (const auto& [p, k] : factorize(g.order()).factors) {
            (void)k;
            std::int64_t part = factorize(g.order()).part(p);
            std::int64_t count = 0;
            for (const SubgroupSet& s : a.lat.subgroups)
                if (s.order == part) ++count;
            expect(count >= 1 && count % p == 1,
                   e.name + ": Sylow count " + std::to_string(count) + " for p=" +
                       std::to_string(p) + " breaks the congruence");
        }
        expect(is_nilpotent(g) == is_nilpotent_by_commuting(g),
               e.name + ": nilpotency criteria disagree");
        ++counted;
    }
    expect(brute_checked >= 30, "too few brute-force comparisons: " +
                                    std::to_string(brute_checked));
    expect(counted >= 80, "too few counting checks: " + std::to_string(counted));
}

static void criterion10() {
    const char* bin = std::getenv("HSVERIFY_BIN");
    expect(bin != nullptr, "HSVERIFY_BIN not set");
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() /
        ("hsverify-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto run = [&](const std::string& outfile) {
        std::filesystem::path out = dir / outfile;
        std::string cmd = "\"" + std::string(bin) + "\" verify --out \"" + out.string() +
                          "\" > /dev/null 2>&1";
        int raw = std::system(cmd.c_str());
        expect(WIFEXITED(raw), "verifier did not exit normally");
        expect_eq(WEXITSTATUS(raw), 1,
                  "exit status (default corpus contains non-members)");
        return slurp(out);
    };
    std::string first = run("report-a.jsonl");
    std::string second = run("report-b.jsonl");
    expect(!first.empty(), "empty report");
    expect(first == second, "reports differ between runs");
    expect(contains(first.substr(0, 200), "\"type\":\"meta\""),
           "report does not start with a meta line");
    std::int64_t lines = std::count(first.begin(), first.end(), '\n');
    expect(lines > 1500, "report suspiciously short: " + std::to_string(lines) +
                             " lines");
}

int main() {
    criterion(1, "a product of two members need not be a member", criterion1);
    criterion(2, "Schmidt-subgroup anatomy holds across the default corpus", criterion2);
    criterion(3, "member structure claims hold across the default corpus", criterion3);
    criterion(4, "members carry a normal nilpotent Hall subgroup with cyclic quotient",
              criterion4);
    criterion(5, "members have Sylow towers and nilpotent-or-Schmidt Hall pairs",
              criterion5);
    criterion(6, "cyclic Hall subgroups for primitive prime divisors in linear groups",
              criterion6);
    criterion(7, "the three-block tower member analyzed in full", criterion7);
    criterion(8, "the minimal extraspecial-base member verified by targeted checks",
              criterion8);
    criterion(9, "lattice agrees with brute force and counting congruences", criterion9);
    criterion(10, "verifier runs are deterministic and signal failures", criterion10);
    std::cout << (10 - g_failures) << "/10 criteria passed" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
