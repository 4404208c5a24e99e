#include "g2/kummer.hpp"

namespace g2 {

namespace {

Real max_abs(const Point4<Complex>& p)
{
    Real m = 0;
    for (const auto& c : p)
        m = std::max(m, abs(c));
    return m;
}

}  // namespace

ThetaCoordinateResiduals theta_coordinate_checks(const SiegelPoint& tau, const CVec2& z, double tol)
{
    const auto& table = theta_table();
    const auto& dual = dual_table();
    SiegelPoint tau2 = tau.scaled(Real(2));
    CVec2 z2 = {z[0] * Complex(Real(2)), z[1] * Complex(Real(2))};

    ThetaNulls n = even_nulls(tau, tol);
    DualThetaNulls d = dual_nulls(tau, tol);
    Point4<Complex> th{n.at(1), n.at(2), n.at(3), n.at(4)};
    Point4<Complex> T{d.at(1), d.at(2), d.at(3), d.at(4)};

    auto tz = [&](int label) { return theta_value(table[label - 1], z, tau, tol); };
    auto sq = [](const Complex& c) { return c * c; };

    ThetaCoordinateResiduals out;

    GoepelModel<Complex> G = goepel_from_theta(th);
    Point4<Complex> pg{sq(tz(1)), sq(tz(2)), sq(tz(3)), sq(tz(4))};
    Real mg = max_abs(pg);
    Real sg = 1 + abs(G.alpha) + abs(G.beta) + abs(G.gamma);
    out.goepel = abs(G.eval(pg)) / (pow(mg, 4) * (sg * sg + 4 * abs(G.delta2)));

    HudsonModel<Complex> H = hudson_from_seed(T);
    Point4<Complex> ph;
    for (int j = 0; j < 4; ++j)
        ph[j] = theta_value(dual[j], z2, tau2, tol);
    Real mh = max_abs(ph);
    out.hudson = abs(H.eval(ph)) / (pow(mh, 4) * (1 + abs(H.A) + abs(H.B) + abs(H.C) + 2 * abs(H.D)));

    RosenhainQuarticModel<Complex> Rq = rosenhainq_from_seed(T);
    Point4<Complex> pr{sq(tz(1)), sq(tz(2)), sq(tz(7)), sq(tz(12))};
    Real mr = max_abs(pr);
    Real sr = 1 + abs(Rq.a) * abs(Rq.a) + abs(Rq.b) * abs(Rq.b) + abs(Rq.c) * abs(Rq.c) + abs(Rq.d2);
    out.rosenhain = abs(Rq.eval(pr)) / (pow(mr, 4) * sr);
    return out;
}

}  // namespace g2
