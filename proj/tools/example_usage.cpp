// Small walk through the library: build the seminormal representation for
// G(2,1,2), read off gamma and gamma', and check one alpha identity by hand.

#include <iostream>

#include "hecke/hecke.hpp"

using namespace hecke;

int main() {
    auto params = Params::defaults(Variant::nondegenerate, 2, 2);
    std::cout << params.describe() << '\n';

    Representation rep(params);
    Bases bases(rep);

    for (const auto& t : rep.index().all())
        std::cout << to_string(t) << "  gamma=" << to_string(bases.gamma().at(t))
                  << "  gamma'=" << to_string(bases.gamma_prime().at(t)) << '\n';

    // g_{st} is a scalar multiple of f_{st}.
    auto lam = rep.index().shape(0);
    auto tabs = standard_tableaux(lam);
    const auto& s = tabs.front();
    const auto& t = tabs.back();
    auto alpha = alpha_formula(params, bases.gamma(), bases.gamma_prime(), s, t);
    auto ratio = bases.g(s, t).ratio_to(bases.f(s, t));
    std::cout << "alpha(" << to_string(s) << ", " << to_string(t) << ") = " << to_string(alpha.first)
              << ", measured " << (ratio ? to_string(*ratio) : std::string("none")) << '\n';

    auto report = run_verification(params, {"alpha", "beta", "duality"}, VerifyOptions{});
    for (const auto& suite : report.suites)
        std::cout << suite.name << ' ' << suite.passed() << '/' << suite.total() << '\n';
    return report.ok() ? 0 : 1;
}
