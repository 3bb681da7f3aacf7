// Acceptance suite: runs every acceptance criterion end to end and prints one
// pass/fail line per criterion. Usage: acceptance <path-to-ddx-cli>.
// Exits nonzero if any criterion fails.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "ddx/ladder.hpp"
#include "test_util.hpp"

using namespace ddx;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
    if (!ok) ++g_failures;
}

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, decltype(&pclose)> pipe(popen(cmd.c_str(), "r"), &pclose);
    CliResult res{-1, {}};
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe.release());
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

// Applies fn to every non-degenerate (family, n, branch) cell; returns false
// if fn fails anywhere or a degenerate cell shows up where none is expected.
bool sweep_cells(long n_max, const std::function<bool(const FamilySpec&, const FactorizationData&)>& fn) {
    bool ok = true;
    for (const auto& fam : testutil::builtin_specs())
        for (long n = 0; n <= n_max; ++n)
            for (Branch b : {Branch::raise, Branch::lower}) {
                try {
                    ok = ok && fn(fam, factor_pair(fam, n, b));
                } catch (const DegenerateDenominator&) {
                    // only hahn(0,0,3) at (n=0, branch 2) lacks a Darboux step
                    ok = ok && fam.kind == FamilyKind::hahn && n == 0 && b == Branch::lower;
                }
            }
    return ok;
}

void criterion_1() {
    report(1, "factorization identity: H - mu(n) = (E+g)(E+f), exact, n = 0..12, both branches",
           sweep_cells(12, [](const FamilySpec& fam, const FactorizationData& fd) {
               return factorization_residual(hamiltonian(fam, fd.n), fd.mu, fd.f, fd.g).is_zero() &&
                      verify_riccati_system(fam, fd);
           }));
}

void criterion_2() {
    report(2, "factor swap gives H(x;n+-1) - mu(n) and Delta(f-g) = lambda(n+-1) - lambda(n)",
           sweep_cells(12, [](const FamilySpec& fam, const FactorizationData& fd) {
               return verify_swap(fam, fd) && verify_eigenvalue_shift(fam, fd);
           }));
}

void criterion_3() {
    report(3, "commutation: H(x;n+-1)(E+f) = (E+f)H(x;n), zero operator residual",
           sweep_cells(12, [](const FamilySpec& fam, const FactorizationData& fd) {
               return verify_commutation(fam, fd);
           }));
}

void criterion_4() {
    report(4, "discrete Riccati residual vanishes for phi(x) = phi(n)x + psi(n)",
           sweep_cells(12, [](const FamilySpec& fam, const FactorizationData& fd) {
               return verify_riccati_residual(fam, fd);
           }));
}

void criterion_5() {
    bool ok = true;
    for (const auto& fam : testutil::builtin_specs()) ok = ok && verify_chain(fam, 0, 10);
    report(5, "dressing chain holds along branch-1 data for n = 0..10, all families", ok);
}

void criterion_6() {
    const ComparisonReport ch = verify_reference(FamilyKind::charlier);
    bool ok = ch.all_asserted_match();
    for (const char* name : {"H", "f1", "g1", "f2", "g2", "mu1", "mu2"}) {
        const ComparisonEntry* e = ch.find(name);
        ok = ok && e && e->matched;
    }
    const ComparisonReport mx = verify_reference(FamilyKind::meixner);
    ok = ok && mx.all_asserted_match();
    const ComparisonEntry* g1 = mx.find("g1");
    ok = ok && g1 && !g1->matched && !g1->asserted;  // flagged discrepancy, not silently fixed
    for (const char* name : {"H", "f1", "f2", "g2", "mu1", "mu2"}) {
        const ComparisonEntry* e = mx.find(name);
        ok = ok && e && e->matched;
    }
    const ComparisonReport hn = verify_reference(FamilyKind::hahn);
    ok = ok && hn.all_asserted_match();
    for (const char* name : {"psi1", "psi2", "f1"}) {
        const ComparisonEntry* e = hn.find(name);
        ok = ok && e && e->matched && e->asserted;
    }
    report(6, "printed reference forms: charlier full match, meixner g1 flagged, hahn psi1/psi2/f1 match",
           ok);
}

void criterion_7() {
    bool ok = true;
    for (const auto& fam : testutil::builtin_specs()) {
        const GeneratedFamily gen = generate_family(fam, 12);
        for (long n = 0; n <= 12; ++n)
            ok = ok && gen.polys[static_cast<std::size_t>(n)] == eigenpoly(fam, n);
    }
    const FamilySpec ch = make_family(FamilyKind::charlier, {{"mu", Rational(1)}});
    ok = ok && eigenpoly(ch, 3) == Poly{Rational(-1), Rational(8), Rational(-6), Rational(1)};
    ok = ok && raise_once(ch, 2, eigenpoly(ch, 2)).c == Rational(-1);
    ok = ok && lower_once(ch, 2, eigenpoly(ch, 2)).c == Rational(2);
    const FamilySpec hn = make_family(
        FamilyKind::hahn, {{"alpha", Rational(0)}, {"beta", Rational(0)}, {"N", Rational(3)}});
    ok = ok && eigenpoly(hn, 2) == Poly{Rational(1, 3), Rational(-2), Rational(1)};
    ok = ok && raise_once(hn, 1, eigenpoly(hn, 1)).c == Rational(-3);
    report(7, "iterated raising equals the independent eigen-solve oracle, n = 0..12", ok);
}

void criterion_8() {
    bool ok = true;
    for (const auto& fam : testutil::builtin_specs())
        for (long n = 0; n <= 11; ++n) {
            const Rational mu1 = mu_shift(fam, n, Branch::raise);
            try {
                const Rational c1 = raise_once(fam, n, eigenpoly(fam, n)).c;
                const Rational c2 = lower_once(fam, n + 1, eigenpoly(fam, n + 1)).c;
                ok = ok && c1 * c2 == -mu1;
            } catch (const LadderDegreeError&) {
                // c2(n+1) = 0 exactly where mu1(n) = 0; the law degenerates to 0 = 0
                ok = ok && mu1 == 0;
            }
        }
    // charlier closed check: c1 = -1, c2(n+1) = mu(n+1), mu1(n) = mu n + mu
    const Rational mu(5, 2);
    const FamilySpec ch = make_family(FamilyKind::charlier, {{"mu", mu}});
    for (long n = 0; n <= 11; ++n) {
        ok = ok && raise_once(ch, n, eigenpoly(ch, n)).c == Rational(-1);
        ok = ok && lower_once(ch, n + 1, eigenpoly(ch, n + 1)).c == mu * Rational(n + 1);
        ok = ok && mu_shift(ch, n, Branch::raise) == mu * Rational(n) + mu;
    }
    report(8, "ladder-constant law c1(n) c2(n+1) = -mu1(n), n = 0..11", ok);
}

void criterion_9(const std::string& cli) {
    const FamilySpec fam = make_family(FamilyKind::charlier, {{"mu", Rational(1)}});
    const FactorizationData fd = factor_pair(fam, 2, Branch::raise);
    bool ok = true;

    FactorizationData bad = fd;
    bad.f = bad.f + Poly::constant(Rational(1));
    ok = ok && !verify_factorization(fam, bad) && !verify_commutation(fam, bad);
    bad = fd;
    bad.g = bad.g + Poly::constant(Rational(1));
    ok = ok && !verify_factorization(fam, bad) && !verify_swap(fam, bad);
    bad = fd;
    bad.psi += 1;
    ok = ok && !verify_riccati_residual(fam, bad);
    // corrupted lambda(n+1), realized as H(x;n+1) - E
    const DiffOp h_bad = hamiltonian(fam, 3) - DiffOp::shift(1);
    ok = ok && !swap_residual(h_bad, fd.mu, fd.f, fd.g).is_zero();
    ok = ok && !commutation_residual(h_bad, hamiltonian(fam, 2), fd.f).is_zero();

    for (const std::string which : {"f", "g", "lambda"}) {
        const CliResult res =
            run_cli(cli, "verify --family charlier --param mu=1 --n-max 4 --corrupt " + which);
        ok = ok && res.exit_code == 1;
    }
    report(9, "negative controls: verifiers reject one-coefficient corruptions of f, g, lambda "
              "and verify exits 1", ok);
}

void criterion_10(const std::string& cli) {
    const std::string args =
        "verify --family hahn --param alpha=1/2 --param beta=3/2 --param N=8 --n-max 12 --json";
    const CliResult a = run_cli(cli, args);
    const CliResult b = run_cli(cli, args);
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out;
    report(10, "determinism: identical verify invocations produce byte-identical reports", ok);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-ddx-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(cli);
    criterion_10(cli);
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
