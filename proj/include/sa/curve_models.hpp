#pragma once

#include <map>

#include "sa/group_spec.hpp"

namespace sa {

// Affine plane-model template for one of the classified families, with the
// generating automorphisms in the same coordinates. w<n> denotes a primitive
// n-th root of unity; t and n_k are free parameters of the families.
struct CurveModel {
    std::string family;
    int q = 0;
    std::string equation;
    std::vector<std::string> automorphism_generators;
    std::map<std::string, std::string> parameters;
};

namespace detail {

inline std::string pow_str(const std::string& base, long long e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

inline int least_primitive_fourth_root(int q) {
    for (int r = 2; r < q - 1; ++r)
        if (static_cast<long long>(r) * r % q == static_cast<long long>(q) - 1) return r;
    throw std::invalid_argument("no primitive fourth root of unity modulo " + std::to_string(q));
}

}  // namespace detail

inline CurveModel curve_model(const std::string& family_tag, int q) {
    if (!is_prime(q) || q < 5)
        throw std::invalid_argument("curve_model: q must be a prime >= 5");
    std::string fam = family_tag;
    if (fam == "Cg") fam = "C_g";
    if (fam == "Kg") fam = "K_g";
    if (fam == "X2,k") fam = "X2k";
    const std::string qs = std::to_string(q);
    const std::string wq = "w" + qs;
    CurveModel m;
    m.family = fam;
    m.q = q;

    if (fam == "C_g" || fam == "X8") {
        m.equation = fam == "X8"
                         ? "y^2=x^" + std::to_string(2 * q) + "-1"
                         : "y^2=(x^" + qs + "-1)(x^" + qs + "-t)";
        m.automorphism_generators = {
            "(x,y) -> (" + wq + "*x, -y)",
            "(x,y) -> (t^(1/" + qs + ")/x, t^(1/2)*y/x^" + qs + ")"};
        m.parameters["t"] = fam == "X8" ? "-1" : "free, t != 0, 1";
        if (fam == "X8") m.parameters["automorphism count"] = std::to_string(8 * q);
    } else if (fam == "X4") {
        if (q % 4 != 1)
            throw std::invalid_argument("curve_model: X4 requires q = 1 mod 4");
        int rho = detail::least_primitive_fourth_root(q);
        long long e = (static_cast<long long>(rho) * rho + 1) / q;
        m.equation = "y^" + qs + "=(x-1)(x-i)^" + std::to_string(rho) + "(x+1)^" +
                     std::to_string(q - 1) + "(x+i)^" + std::to_string(q - rho);
        m.automorphism_generators = {
            "(x,y) -> (x, " + wq + "*y)",
            "(x,y) -> (i*x, phi(x)*y^" + std::to_string(rho) + ")  where  phi(x) = -(x+i)^" +
                std::to_string(e - rho) + "/((x-i)^" + std::to_string(e - 1) + "*(x+1)^" +
                std::to_string(rho - 1) + ")"};
        m.parameters["rho"] = std::to_string(rho);
        m.parameters["e"] = std::to_string(e);
    } else if (fam == "X3") {
        m.equation = "y^3=x^" + qs + "-1";
        m.automorphism_generators = {"(x,y) -> (" + wq + "*x, w3*y)"};
    } else if (fam == "X2k") {
        m.equation = "y^" + qs + "=x^(n_k)(x^2-1)";
        m.automorphism_generators = {"(x,y) -> (x, " + wq + "*y)",
                                     "(x,y) -> (-x, (-1)^(n_k)*y)"};
        m.parameters["n_k"] = "symbolic, in {1,...," + std::to_string(q - 1) + "} minus {" +
                              std::to_string(q - 2) + "}; k = 1,...," +
                              std::to_string((q - 3) / 2);
    } else if (fam == "K_g") {
        std::string qm1 = std::to_string(q - 1);
        m.equation = "y^" + qs + "=(x-1)(x+1)^" + qm1 + "(x-t)(x+t)^" + qm1;
        m.automorphism_generators = {"(x,y) -> (x, " + wq + "*y)",
                                     "(x,y) -> (-x, (x^2-1)(x^2-t^2)/y)"};
        m.parameters["t"] = "free, t != 0, +1, -1";
    } else {
        throw std::invalid_argument("curve_model: unknown family tag '" + family_tag + "'");
    }
    return m;
}

}  // namespace sa
