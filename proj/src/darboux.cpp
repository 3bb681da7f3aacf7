#include "ddx/darboux.hpp"

namespace ddx {

std::pair<Rational, Rational> riccati_coeffs(const FamilySpec& fam, long n, Branch b) {
    const Rational s0 = fam.sigma0(), s1 = fam.sigma1();
    const Rational t0 = fam.tau0(), t1 = fam.tau1();
    const Rational lam = lambda_of(fam, n);
    const Rational phi = (b == Branch::raise) ? t0 + Rational(n - 1) * s0 : -Rational(n) * s0;
    const Rational denom = Rational(2) * phi + Rational(2) * s0 - t0;
    if (denom == 0)
        throw DegenerateDenominator("lambda(n" + std::string(b == Branch::raise ? "+1" : "-1") +
                                    ") = lambda(n) at n = " + std::to_string(n) + " for family " +
                                    family_name(fam.kind));
    const Rational num = phi * (t1 + t0 - s0 - phi) + lam * s0 + lam * s1 + lam * t0 / 2;
    return {phi, num / denom};
}

Rational mu_shift(const FamilySpec& fam, long n, Branch b) {
    const auto [phi, psi] = riccati_coeffs(fam, n, b);
    const Rational s0 = fam.sigma0(), s1 = fam.sigma1(), s2 = fam.sigma2();
    const Rational t1 = fam.tau1();
    const Rational lam = lambda_of(fam, n);
    return psi * (psi + phi + s1 + s0 - t1) - lam * (s0 + s1 + Rational(2) * s2 + t1) / 2 -
           phi * (s2 + t1 + lam / 2) - lam * lam / 4;
}

FactorizationData factor_pair(const FamilySpec& fam, long n, Branch b) {
    const auto [phi, psi] = riccati_coeffs(fam, n, b);
    const Rational s0 = fam.sigma0(), s1 = fam.sigma1(), s2 = fam.sigma2();
    const Rational t0 = fam.tau0(), t1 = fam.tau1();
    const Rational lam = lambda_of(fam, n);
    FactorizationData fd;
    fd.branch = b;
    fd.n = n;
    fd.phi = phi;
    fd.psi = psi;
    fd.mu = mu_shift(fam, n, b);
    fd.f = Poly{psi - s2 - t1 - lam / 2, phi - s1 - t0, -s0};
    fd.g = Poly{-s0 - s1 - s2 - lam / 2 - phi - psi, -(phi + Rational(2) * s0 + s1), -s0};
    if (!factorization_residual(hamiltonian(fam, n), fd.mu, fd.f, fd.g).is_zero())
        throw InternalIdentityFailure("factorization residual nonzero at n = " + std::to_string(n));
    return fd;
}

DiffOp factorization_residual(const DiffOp& h, const Rational& mu, const Poly& f, const Poly& g) {
    const DiffOp eg = DiffOp::shift(1) + DiffOp::term(0, g);
    const DiffOp ef = DiffOp::shift(1) + DiffOp::term(0, f);
    return h - DiffOp::term(0, Poly::constant(mu)) - eg * ef;
}

DiffOp swap_residual(const DiffOp& h_target, const Rational& mu, const Poly& f, const Poly& g) {
    const DiffOp eg = DiffOp::shift(1) + DiffOp::term(0, g);
    const DiffOp ef = DiffOp::shift(1) + DiffOp::term(0, f);
    return ef * eg - (h_target - DiffOp::term(0, Poly::constant(mu)));
}

DiffOp commutation_residual(const DiffOp& h_target, const DiffOp& h_source, const Poly& f) {
    const DiffOp ef = DiffOp::shift(1) + DiffOp::term(0, f);
    return h_target * ef - ef * h_source;
}

bool verify_riccati_system(const FamilySpec& fam, const FactorizationData& fd) {
    const Rational lam = lambda_of(fam, fd.n);
    const Poly line1 = fd.f.shifted(1) + fd.g +
                       fam.sigma.shifted(1) * Rational(2) + fam.tau.shifted(1) +
                       Poly::constant(lam);
    const Poly line2 = fd.f * fd.g - (fam.sigma + fam.tau) * fam.sigma.shifted(1) +
                       Poly::constant(fd.mu);
    return line1.is_zero() && line2.is_zero();
}

bool verify_factorization(const FamilySpec& fam, const FactorizationData& fd) {
    return factorization_residual(hamiltonian(fam, fd.n), fd.mu, fd.f, fd.g).is_zero() &&
           verify_riccati_system(fam, fd);
}

bool verify_eigenvalue_shift(const FamilySpec& fam, const FactorizationData& fd) {
    const Poly diff = (fd.f - fd.g).delta();
    if (diff.degree() > 0) return false;
    const long np = target_degree(fd.n, fd.branch);
    return diff.coeff(0) == lambda_of(fam, np) - lambda_of(fam, fd.n);
}

bool verify_swap(const FamilySpec& fam, const FactorizationData& fd) {
    const long np = target_degree(fd.n, fd.branch);
    return swap_residual(hamiltonian(fam, np), fd.mu, fd.f, fd.g).is_zero() &&
           verify_eigenvalue_shift(fam, fd);
}

bool verify_commutation(const FamilySpec& fam, const FactorizationData& fd) {
    const long np = target_degree(fd.n, fd.branch);
    return commutation_residual(hamiltonian(fam, np), hamiltonian(fam, fd.n), fd.f).is_zero();
}

bool verify_riccati_residual(const FamilySpec& fam, const FactorizationData& fd) {
    const Rational lam = lambda_of(fam, fd.n);
    const Poly phi_poly{fd.psi, fd.phi};
    const Poly phi_up = phi_poly.shifted(1);
    const Poly residual =
        (fam.sigma.shifted(1) + fam.sigma + fam.tau) * (lam / 2) +
        Poly::constant(lam * lam / 4 + fd.mu) + (fam.sigma + fam.tau) * phi_up -
        fam.sigma.shifted(1) * phi_poly + phi_poly.delta() * (lam / 2) - phi_poly * phi_up;
    return residual.is_zero();
}

bool verify_factorization(const FamilySpec& fam, long n, Branch b) {
    return verify_factorization(fam, factor_pair(fam, n, b));
}
bool verify_swap(const FamilySpec& fam, long n, Branch b) {
    return verify_swap(fam, factor_pair(fam, n, b));
}
bool verify_commutation(const FamilySpec& fam, long n, Branch b) {
    return verify_commutation(fam, factor_pair(fam, n, b));
}
bool verify_riccati_residual(const FamilySpec& fam, long n, Branch b) {
    return verify_riccati_residual(fam, factor_pair(fam, n, b));
}

bool verify_chain(const FamilySpec& fam, long n0, long steps) {
    if (steps <= 0) return true;
    FactorizationData cur = factor_pair(fam, n0, Branch::raise);
    for (long j = n0; j < n0 + steps; ++j) {
        const FactorizationData next = factor_pair(fam, j + 1, Branch::raise);
        const Poly line1 = cur.f + cur.g.shifted(1) - next.f.shifted(1) - next.g;
        const Poly line2 = cur.f * cur.g - next.f * next.g - Poly::constant(next.mu - cur.mu);
        if (!line1.is_zero() || !line2.is_zero()) return false;
        cur = next;
    }
    return true;
}

bool ComparisonReport::all_asserted_match() const {
    for (const auto& e : entries)
        if (e.asserted && !e.matched) return false;
    return true;
}

const ComparisonEntry* ComparisonReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

// Accumulates per-expression agreement across sample points; keeps the forms
// from the first sample (or the first mismatching one) for the report.
struct EntryAccumulator {
    std::vector<ComparisonEntry> entries;

    void record(const std::string& name, bool asserted, bool equal, const std::string& computed,
                const std::string& printed) {
        for (auto& e : entries) {
            if (e.name != name) continue;
            if (e.matched && !equal) {
                e.matched = false;
                e.computed = computed;
                e.printed = printed;
            }
            return;
        }
        entries.push_back({name, equal, asserted, computed, printed});
    }

    void poly(const std::string& name, bool asserted, const Poly& computed, const Poly& printed) {
        record(name, asserted, computed == printed, computed.str(), printed.str());
    }
    void rat(const std::string& name, bool asserted, const Rational& computed, const Rational& printed) {
        record(name, asserted, computed == printed, rational_str(computed), rational_str(printed));
    }
    void op(const std::string& name, bool asserted, const DiffOp& computed, const DiffOp& printed) {
        record(name, asserted, computed == printed, computed.str(), printed.str());
    }
};

DiffOp printed_h(const Poly& e_coeff, const Poly& const_coeff) {
    return DiffOp::shift(2) + DiffOp::term(1, e_coeff) + DiffOp::term(0, const_coeff);
}

void compare_charlier(EntryAccumulator& acc, const Rational& mu, long n) {
    const FamilySpec fam = make_family(FamilyKind::charlier, {{"mu", mu}});
    const Rational lam = -Rational(n);
    const Rational rn(n);
    acc.rat("lambda", true, lambda_of(fam, n), lam);
    acc.op("H", true, hamiltonian(fam, n),
           printed_h(Poly{-(mu + lam + 1), Rational(-1)}, Poly{mu, mu}));
    const FactorizationData b1 = factor_pair(fam, n, Branch::raise);
    const FactorizationData b2 = factor_pair(fam, n, Branch::lower);
    acc.poly("f1", true, b1.f, Poly{rn, Rational(-1)});
    acc.poly("g1", true, b1.g, Poly{-mu});
    acc.poly("f2", true, b2.f, Poly{-mu});
    acc.poly("g2", true, b2.g, Poly{rn - 1, Rational(-1)});
    acc.rat("mu1", true, b1.mu, mu * rn + mu);
    acc.rat("mu2", true, b2.mu, mu * rn);
}

void compare_meixner(EntryAccumulator& acc, const Rational& gamma, const Rational& mu, long n) {
    const FamilySpec fam = make_family(FamilyKind::meixner, {{"gamma", gamma}, {"mu", mu}});
    const Rational lam = -Rational(n) * (Rational(1) - mu);
    const Rational rn(n);
    acc.rat("lambda", true, lambda_of(fam, n), lam);
    acc.op("H", true, hamiltonian(fam, n),
           printed_h(Poly{-(mu * (gamma + 1) + 1 + lam), -(mu + 1)},
                     Poly{gamma * mu, mu * (gamma + 1), mu}));
    const FactorizationData b1 = factor_pair(fam, n, Branch::raise);
    const FactorizationData b2 = factor_pair(fam, n, Branch::lower);
    acc.poly("f1", true, b1.f, Poly{rn, Rational(-1)});
    // The printed g1 is inconsistent with the factorization system given the
    // printed f1 and mu1; the comparison is recorded, not asserted, and the
    // mismatch is surfaced in the report.
    acc.poly("g1", false, b1.g, Poly{-mu * (gamma + rn - 1), -mu});
    acc.poly("f2", true, b2.f, Poly{-mu * (gamma + rn), -mu});
    acc.poly("g2", true, b2.g, Poly{rn - 1, Rational(-1)});
    acc.rat("mu1", true, b1.mu, mu * (rn * gamma + rn * rn + rn + gamma));
    acc.rat("mu2", true, b2.mu, mu * rn * (gamma + rn - 1));
}

void compare_hahn(EntryAccumulator& acc, const Rational& alpha, const Rational& beta, long big_n,
                  long n) {
    const FamilySpec fam = make_family(
        FamilyKind::hahn, {{"alpha", alpha}, {"beta", beta}, {"N", Rational(big_n)}});
    const Rational a = alpha, b = beta, N(big_n), rn(n);
    const Rational lam = -rn * (rn + a + b + 1);
    acc.rat("lambda", true, lambda_of(fam, n), lam);
    acc.op("H", false, hamiltonian(fam, n),
           printed_h(Poly{Rational(5) + 2 * b - a - 3 * N - b * N - lam, Rational(6) + b - a - 2 * N,
                          Rational(2)},
                     Poly{Rational(1) + b - a - 2 * N + N * N - 2 * N * b + a * N - a * b +
                              N * N * b + N * a * b,
                          Rational(4) + 3 * b - 3 * a - 6 * N + 2 * N * N - 4 * N * b + 2 * N * a -
                              2 * a * b + N * N * b + N * a * b,
                          Rational(6) + 3 * b - 3 * a - 6 * N + N * N - 2 * N * b + a * N - a * b,
                          Rational(4) + b - a - 2 * N, Rational(1)}));
    const Rational psi1_printed = ((rn + a + b + 1) * (b + 1) * (N - 1) - lam * (N + a) +
                                   lam * (a + b + 2) / 2) /
                                  (Rational(2) + 2 * rn + a + b);
    const FactorizationData b1 = factor_pair(fam, n, Branch::raise);
    acc.rat("psi1", true, b1.psi, psi1_printed);
    acc.poly("f1", true, b1.f,
             Poly{-(b + 1) * (N - 1) - lam / 2 + psi1_printed, -(N + a + rn - 1), Rational(1)});
    acc.poly("g1", false, b1.g,
             Poly{Rational(2) + b + rn - N - lam / 2 - psi1_printed, Rational(3) + rn + b - N,
                  Rational(1)});
    acc.rat("mu1", false, b1.mu,
            psi1_printed * (psi1_printed - 1 - b * N - rn) - lam * (b + 1) * (N - 1) / 2 -
                lam * (N + a - 1) / 2 + (rn + a + b + 1) * (b + 1) * (N - 1) +
                lam * (rn + 2) * (rn + a + b + 1) / 4);
    const Rational psi2_printed =
        (rn * (b + 1) * (N - 1) + lam * (N + a) - lam * (a + b + 2) / 2) / (2 * rn + a + b);
    const FactorizationData b2 = factor_pair(fam, n, Branch::lower);
    acc.rat("psi2", true, b2.psi, psi2_printed);
    acc.poly("f2", false, b2.f,
             Poly{-(b + 1) * (N - 1) - lam / 2 + psi2_printed, Rational(2) + b - N + rn,
                  Rational(1)});
    acc.poly("g2", false, b2.g,
             Poly{-N - a - rn + 1 - lam / 2 - psi2_printed, Rational(2) - rn - N - a, Rational(1)});
    acc.rat("mu2", false, b2.mu,
            psi2_printed * (psi2_printed + rn + a - b * N + b) - lam * (N + a - 1) / 2 -
                rn * (b + 1) * (N - 1) - lam * (b + 1) * (N - 1) / 2 - lam * rn / 2 -
                lam * lam / 4);
}

}  // namespace

ComparisonReport verify_reference(FamilyKind kind, int n_samples) {
    ComparisonReport report;
    report.kind = kind;
    EntryAccumulator acc;
    switch (kind) {
        case FamilyKind::charlier: {
            const std::vector<std::pair<Rational, long>> samples{
                {Rational(1, 3), 1}, {Rational(1), 2}, {Rational(5, 2), 3},
                {Rational(7, 3), 4}, {Rational(4), 5}, {Rational(2, 7), 6}};
            for (int i = 0; i < n_samples && i < static_cast<int>(samples.size()); ++i)
                compare_charlier(acc, samples[i].first, samples[i].second);
            break;
        }
        case FamilyKind::meixner: {
            const std::vector<std::tuple<Rational, Rational, long>> samples{
                {Rational(1, 2), Rational(1, 3), 1}, {Rational(1), Rational(1, 4), 2},
                {Rational(3, 2), Rational(2, 3), 3}, {Rational(2), Rational(1, 5), 4},
                {Rational(5, 2), Rational(3, 7), 5}, {Rational(3), Rational(2, 5), 6}};
            for (int i = 0; i < n_samples && i < static_cast<int>(samples.size()); ++i) {
                const auto& [gamma, mu, n] = samples[i];
                compare_meixner(acc, gamma, mu, n);
            }
            break;
        }
        case FamilyKind::hahn: {
            const std::vector<std::tuple<Rational, Rational, long, long>> samples{
                {Rational(0), Rational(0), 3, 1},       {Rational(1, 2), Rational(3, 2), 8, 2},
                {Rational(1), Rational(2), 5, 3},       {Rational(1, 3), Rational(1, 4), 4, 2},
                {Rational(2), Rational(1), 6, 4},       {Rational(1, 5), Rational(2, 5), 7, 3}};
            for (int i = 0; i < n_samples && i < static_cast<int>(samples.size()); ++i) {
                const auto& [alpha, beta, N, n] = samples[i];
                compare_hahn(acc, alpha, beta, N, n);
            }
            break;
        }
        default:
            throw InadmissibleParameter("no printed reference forms for this family");
    }
    report.entries = std::move(acc.entries);
    return report;
}

}  // namespace ddx
