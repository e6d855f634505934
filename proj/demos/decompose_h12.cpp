// Expands H_1^(2)(q) from its Hecke-type double sum and from the two false
// theta functions it decomposes into, and prints both.

#include <iostream>

#include <qseries.hpp>

int main() {
    using namespace qseries;
    constexpr exp_t order = 40;

    const series hecke = habiro_hecke_side(habiro_spec(2, 1), order);
    const series false_thetas =
        false_theta_sum(qpow(-7, -1), 15, order) + shift(false_theta_sum(qpow(-2, -1), 15, order - 1), 1);

    std::cout << "1/(q)_inf f_{3,2,3}(q^2,q^2;q) = " << to_text(hecke) << "\n";
    std::cout << "false theta expansion          = " << to_text(false_thetas) << "\n";
    std::cout << to_text(compare_q(hecke, false_thetas, order, "h12-example")) << "\n";
}
