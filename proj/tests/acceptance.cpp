// Acceptance suite: runs the full certification battery end to end and prints
// one PASS/FAIL line per criterion. The CLI binary path is argv[1]; criterion
// one drives the actual executable, the rest use the library directly.
//
// Corpus: the rational family at diameters 1..8 plus 200 deterministic random
// prime-field systems (p in {7, 11, 13}, d in {2, 3, 4}) that eigendecompose.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "leonard/characterize.hpp"
#include "leonard/families.hpp"
#include "leonard/io.hpp"

using namespace leonard;
using nlohmann::json;

namespace {

std::string g_binary;
int g_failures = 0;

struct Criterion {
    int number;
    std::string name;
    double limit_seconds; // 0: no limit
    std::function<void(std::ostringstream&)> body; // writes failure details
};

void run_criterion(const Criterion& c) {
    std::ostringstream problems;
    auto start = std::chrono::steady_clock::now();
    try {
        c.body(problems);
    } catch (const std::exception& e) {
        problems << "exception: " << e.what() << "; ";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && elapsed > c.limit_seconds)
        problems << "took " << elapsed << " s, limit " << c.limit_seconds << " s; ";

    std::string detail = problems.str();
    if (detail.empty()) {
        std::printf("PASS [%d] %s (%.2f s)\n", c.number, c.name.c_str(), elapsed);
    } else {
        std::printf("FAIL [%d] %s (%.2f s): %s\n", c.number, c.name.c_str(), elapsed,
                    detail.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

#define EXPECT(cond, msg)                                                                          \
    do {                                                                                           \
        if (!(cond))                                                                               \
            problems << msg << "; ";                                                               \
    } while (0)

Scalar q(long num, long den = 1) {
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar::from_mpq(v, FieldSpec::rational());
}

struct Corpus {
    std::vector<BipartiteSystem> all;      // every instance
    std::vector<BipartiteSystem> rational; // diameters 1..8
    std::vector<BipartiteSystem> random_gf;
};

Corpus build_corpus() {
    Corpus corpus;
    for (int d = 1; d <= 8; ++d) {
        corpus.rational.push_back(krawtchouk(d, FieldSpec::rational()));
        corpus.all.push_back(corpus.rational.back());
    }
    const unsigned long primes[] = {7, 11, 13};
    const int dims[] = {2, 3, 4};
    std::uint64_t seed = 1;
    size_t combo = 0;
    while (corpus.random_gf.size() < 200) {
        unsigned long p = primes[combo % 3];
        int d = dims[(combo / 3) % 3];
        ++combo;
        BipartiteSystem sys = random_system(d, FieldSpec::prime(p), seed++);
        try {
            eigendecompose(sys);
        } catch (const NotMultiplicityFreeError&) {
            continue;
        }
        corpus.random_gf.push_back(sys);
        corpus.all.push_back(sys);
    }
    return corpus;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, std::string& out) {
    std::string cmd = "'" + g_binary + "' " + args + " > acc_stdout.tmp 2> acc_stderr.tmp";
    int status = std::system(cmd.c_str());
    out = slurp("acc_stdout.tmp");
    std::remove("acc_stdout.tmp");
    std::remove("acc_stderr.tmp");
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool suites_all_hold(const json& suite, std::ostringstream& problems, const std::string& label) {
    bool ok = true;
    for (const auto& group : {"leaf", "tail", "leonard_system"})
        for (const auto& rep : suite.at(group)) {
            if (rep.at("status") != "holds") {
                problems << label << " " << group << "/" << rep.at("name").get<std::string>()
                         << " is " << rep.at("status").get<std::string>() << "; ";
                ok = false;
            }
        }
    return ok;
}

// ---------------------------------------------------------------------------
// 1. Golden run through the CLI.
void criterion_golden(std::ostringstream& problems) {
    write_system_file(krawtchouk(3, FieldSpec::rational()), "acc_k3.json");
    std::string out;
    int code = run_cli("check acc_k3.json --identities --oracle", out);
    EXPECT(code == 0, "exit code " << code);
    json r = json::parse(out);
    EXPECT(r.at("eigenvalues") == json({"3", "1", "-1", "-3"}), "eigenvalues differ");
    EXPECT(r.at("delta_edges") == json({{0, 1}, {1, 2}, {2, 3}}), "diagram is not the path");
    EXPECT(r.at("a_star") == json({"0", "0", "0", "0"}), "a* differs");

    json expected_pairs = json::array();
    for (const auto& p : r.at("qpoly_pairs"))
        expected_pairs.push_back(json::array({p.at("theta_i"), p.at("theta_j")}));
    json golden_pairs = json::array({json::array({"3", "1"}), json::array({"-3", "-1"})});
    EXPECT(expected_pairs == golden_pairs, "certified pairs differ");
    for (const auto& p : r.at("pairs"))
        if (p.at("qpoly") == true)
            EXPECT(p.at("beta") == "2", "beta differs");

    bool saw_psi = false, saw_zeta = false;
    for (const auto& suite : r.at("identities").at("orderings")) {
        suites_all_hold(suite, problems, "ordering");
        for (const auto& rep : suite.at("tail")) {
            if (rep.at("name") == "psi_closed_form") {
                EXPECT(rep.at("value") == "4", "psi differs");
                saw_psi = true;
            }
            if (rep.at("name") == "zeta_closed_form") {
                EXPECT(rep.at("value") == "-6", "zeta differs");
                saw_zeta = true;
            }
        }
    }
    EXPECT(saw_psi && saw_zeta, "psi/zeta missing from the report");
    for (const auto& rep : r.at("identities").at("sequence_algebra"))
        EXPECT(rep.at("status") == "holds", "sequence algebra check failed");
    EXPECT(r.at("oracle").at("agrees") == true, "oracle disagrees");
    std::remove("acc_k3.json");
}

// ---------------------------------------------------------------------------
// 2. Characterization equivalence across the corpus. The library asserts the
// equivalence internally on every pair; this re-derives it from the reports.
void criterion_biconditional(const Corpus& corpus, std::ostringstream& problems) {
    long pairs_checked = 0;
    for (const BipartiteSystem& sys : corpus.all) {
        for (const ConditionReport& r : main_theorem_check(sys)) {
            bool conditions = r.cond_normalizing && r.cond_tail && r.cond_distinct_dual;
            EXPECT(conditions == r.qpoly, "pair (" << r.i << ", " << r.j << ") breaks the"
                                                   << " equivalence");
            ++pairs_checked;
        }
    }
    EXPECT(pairs_checked > 0, "no pairs checked");
}

// ---------------------------------------------------------------------------
// 3. Exhaustive-oracle agreement on every corpus instance with d <= 4.
void criterion_oracle(const Corpus& corpus, std::ostringstream& problems) {
    int instances = 0;
    for (const BipartiteSystem& sys : corpus.all) {
        if (sys.d() > 4)
            continue;
        ++instances;
        Certification cert = certify(sys);
        LeonardVerdict v = brute_force_leonard(sys.a_matrix(), sys.a_star_matrix());
        bool certified = !cert.orderings.empty();
        EXPECT(v.leonard == certified, "verdicts disagree over "
                                           << sys.field().describe() << " d = " << sys.d());
        if (v.leonard) {
            bool found = false;
            for (const std::vector<int>& ord : cert.orderings)
                found = found || ord == v.witness->first;
            EXPECT(found, "oracle witness is not a certified ordering");
        }
    }
    EXPECT(instances >= 200, "expected at least 200 small instances, saw " << instances);
}

// ---------------------------------------------------------------------------
// 4. Metamorphic mutations.
bool same_reports(const std::vector<ConditionReport>& a, const std::vector<ConditionReport>& b) {
    if (a.size() != b.size())
        return false;
    for (size_t k = 0; k < a.size(); ++k) {
        const ConditionReport& x = a[k];
        const ConditionReport& y = b[k];
        if (x.i != y.i || x.j != y.j || x.cond_normalizing != y.cond_normalizing ||
            x.cond_tail != y.cond_tail || x.cond_distinct_dual != y.cond_distinct_dual ||
            x.qpoly != y.qpoly || x.beta.has_value() != y.beta.has_value())
            return false;
    }
    return true;
}

void criterion_mutations(std::ostringstream& problems) {
    std::mt19937_64 rng(2024);
    auto small = [&rng](bool nonzero) {
        long v = static_cast<long>(rng() % 19) - 9;
        if (nonzero && v == 0)
            v = 1;
        return v;
    };
    for (int d = 3; d <= 6; ++d) {
        BipartiteSystem sys = krawtchouk(d, FieldSpec::rational());
        std::vector<ConditionReport> base = main_theorem_check(sys);

        for (int trial = 0; trial < 20; ++trial) {
            AffineThetaStar aff{q(small(true), 1 + static_cast<long>(rng() % 5)),
                                q(small(false))};
            std::vector<ConditionReport> got = main_theorem_check(apply_mutation(sys, aff));
            EXPECT(same_reports(base, got), "affine mutation changed a verdict at d = " << d);

            std::vector<Scalar> beta;
            for (int i = 0; i < d; ++i)
                beta.push_back(q(small(true), 1 + static_cast<long>(rng() % 5)));
            got = main_theorem_check(apply_mutation(sys, RescaleBasisMutation{beta}));
            EXPECT(same_reports(base, got), "rescale mutation changed a verdict at d = " << d);

            int src = static_cast<int>(rng() % (d + 1));
            int dst = static_cast<int>(rng() % (d + 1));
            if (src == dst)
                dst = (dst + 1) % (d + 1);
            BipartiteSystem dup = apply_mutation(sys, DuplicateThetaStar{src, dst});
            for (const ConditionReport& r : main_theorem_check(dup)) {
                EXPECT(!r.cond_distinct_dual, "duplicate left the distinctness condition true");
                EXPECT(!r.qpoly, "duplicate left a certified pair");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// 5. Leonard-system identities and spectrum reconstruction on every certified
// instance and ordering.
void criterion_ls_identities(const Corpus& corpus, std::ostringstream& problems) {
    int certified_count = 0;
    for (const BipartiteSystem& sys : corpus.all) {
        Certification cert = certify(sys);
        for (const std::vector<int>& ordering : cert.orderings) {
            ++certified_count;
            // A certified ordering satisfies every hypothesis of the three
            // suites except the diameter bound, so nothing may fail and
            // "not applicable" is admissible only below diameter 3.
            std::vector<IdentityReport> reports =
                verify_bipartite_ls_identities(sys, cert.sp, ordering);
            for (const IdentityReport& r : verify_leaf_identities(sys, cert.sp, ordering))
                reports.push_back(r);
            for (const IdentityReport& r : verify_tail_identities(sys, cert.sp, ordering))
                reports.push_back(r);
            for (const IdentityReport& r : reports) {
                bool acceptable = r.status == CheckStatus::Holds ||
                                  (r.status == CheckStatus::NotApplicable && sys.d() < 3);
                EXPECT(acceptable, r.name << " is " << to_string(r.status) << " over "
                                          << sys.field().describe() << " d = " << sys.d());
            }
            // Round trip: theta_0 of a certified ordering is never zero.
            std::vector<Scalar> th;
            for (int k : ordering)
                th.push_back(cert.sp.theta[static_cast<size_t>(k)]);
            EXPECT(!th.front().is_zero(), "certified endpoint eigenvalue is zero");
            std::vector<Scalar> rec = reconstruct_theta(sys.theta_star(), 0, th.front());
            EXPECT(rec == th, "reconstruction differs from the certified spectrum");
        }
    }
    EXPECT(certified_count >= 16, "suspiciously few certified orderings: " << certified_count);
}

// ---------------------------------------------------------------------------
// 6. Normalizing <=> constant row sum, across every eigenvalue in the corpus.
void criterion_row_sums(const Corpus& corpus, std::ostringstream& problems) {
    for (const BipartiteSystem& sys : corpus.all) {
        SpectralData sp = eigendecompose(sys);
        for (const Scalar& theta : sp.theta) {
            NormalizingVerdict v = is_normalizing(sys, sp, theta);
            bool succeeded = false;
            try {
                BipartiteSystem r = row_sum_basis(sys, theta);
                succeeded = true;
                for (int i = 0; i <= r.d(); ++i)
                    EXPECT(r.c_at(i) + r.b_at(i) == theta, "row sum differs from theta");
            } catch (const PreconditionError&) {
            }
            EXPECT(succeeded == v.normalizing, "normalizing and row-sum verdicts disagree over "
                                                   << sys.field().describe());
        }
    }
}

// ---------------------------------------------------------------------------
// 7. Idempotent calculus on every decomposition in the corpus.
void criterion_idempotents(const Corpus& corpus, std::ostringstream& problems) {
    for (const BipartiteSystem& sys : corpus.all) {
        SpectralData sp = eigendecompose(sys);
        const int n = sys.d() + 1;
        IdempotentSystemVerdict v = is_idempotent_system(sp.E);
        EXPECT(v.ok, "idempotent system check failed: " << v.detail);

        Matrix sum(n, n, sys.field());
        Matrix weighted(n, n, sys.field());
        for (int i = 0; i < n; ++i) {
            sum = sum + sp.E[static_cast<size_t>(i)];
            weighted = weighted + sp.E[static_cast<size_t>(i)].scaled(
                                      sp.theta[static_cast<size_t>(i)]);
        }
        EXPECT(sum == Matrix::identity(n, sys.field()), "idempotents do not sum to the identity");
        EXPECT(weighted == sys.a_matrix(), "A is not the weighted idempotent sum");

        Matrix a_star = sys.a_star_matrix();
        for (int i = 0; i < n; ++i) {
            const Matrix& e = sp.E[static_cast<size_t>(i)];
            EXPECT(e * a_star * e == e.scaled(sp.a_star[static_cast<size_t>(i)]),
                   "dual sandwich differs from a*_i E_i");
            for (int k = 0; k < n; ++k)
                EXPECT((e * a_star * sp.E[static_cast<size_t>(k)]).is_zero() ==
                           (sp.E[static_cast<size_t>(k)] * a_star * e).is_zero(),
                       "zero pattern is not symmetric");
        }
    }
}

// ---------------------------------------------------------------------------
// 8. Sequence algebra: ratio equivalences and the mediant contract.
void criterion_sequence_algebra(std::ostringstream& problems) {
    for (int len = 4; len <= 12; ++len) {
        std::vector<Scalar> arith, geom;
        for (long k = 0; k < len; ++k) {
            arith.push_back(q(5 - 3 * k));
            geom.push_back(q(1L << k));
        }
        for (int i = 3; i <= len - 1; ++i) {
            for (const auto& ts : {arith, geom})
                for (const IdentityReport& r : check_frac_equivalence(ts, i))
                    EXPECT(r.status == CheckStatus::Holds,
                           r.name << " is " << to_string(r.status) << " at length " << len
                                  << ", i = " << i);
        }
    }

    std::mt19937_64 rng(77);
    const FieldSpec F13 = FieldSpec::prime(13);
    int done = 0;
    while (done < 1000) {
        bool prime_case = done % 2 == 0;
        FieldSpec f = prime_case ? F13 : FieldSpec::rational();
        auto pick = [&](bool nonzero) {
            if (prime_case) {
                unsigned long v = rng() % (nonzero ? 12 : 13);
                return Scalar::from_integer(static_cast<long>(nonzero ? v + 1 : v), f);
            }
            long num = static_cast<long>(rng() % 19) - 9;
            if (nonzero && num == 0)
                num = 2;
            return q(num, 1 + static_cast<long>(rng() % 7));
        };
        Scalar m = pick(false), n = pick(true), k = pick(true);
        if ((n + k * n).is_zero())
            continue;
        Scalar med = mediant(m, n, k * m, k * n);
        EXPECT(med * n == m, "mediant contract fails");
        ++done;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
        return 2;
    }
    g_binary = argv[1];

    std::printf("building corpus (rational family d = 1..8 plus 200 random prime-field"
                " systems)...\n");
    Corpus corpus = build_corpus();
    std::printf("corpus ready: %zu rational + %zu random instances\n", corpus.rational.size(),
                corpus.random_gf.size());

    std::vector<Criterion> criteria = {
        {1, "golden run through the CLI", 1.0, criterion_golden},
        {2, "characterization equivalence sweep", 30.0,
         [&corpus](std::ostringstream& p) { criterion_biconditional(corpus, p); }},
        {3, "exhaustive oracle agreement (d <= 4)", 60.0,
         [&corpus](std::ostringstream& p) { criterion_oracle(corpus, p); }},
        {4, "metamorphic mutation suite", 0.0, criterion_mutations},
        {5, "Leonard-system identities and reconstruction", 0.0,
         [&corpus](std::ostringstream& p) { criterion_ls_identities(corpus, p); }},
        {6, "normalizing / row-sum equivalence", 0.0,
         [&corpus](std::ostringstream& p) { criterion_row_sums(corpus, p); }},
        {7, "idempotent calculus", 0.0,
         [&corpus](std::ostringstream& p) { criterion_idempotents(corpus, p); }},
        {8, "sequence algebra and mediant contract", 0.0, criterion_sequence_algebra},
    };
    for (const Criterion& c : criteria)
        run_criterion(c);

    if (g_failures == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
