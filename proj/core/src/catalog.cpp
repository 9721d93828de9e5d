#include "prealt/catalog.hpp"

#include <array>

namespace prealt {

namespace {

const Field Q = Field::rationals();

Scalar q(long long num, long long den = 1) { return Scalar::from_ratio(Q, num, den); }

AlgebraFile n2()
{
    Tensor3 c(Q, 2);
    c(0, 0, 1) = q(1);
    auto f = AlgebraFile::from(AlternativeAlgebra::make(c));
    f.description = "e1 e1 = e2";
    return f;
}

AlgebraFile graded_from(std::size_t n, const std::vector<std::array<std::size_t, 3>>& products,
                        std::vector<long long> degrees, std::string description)
{
    Tensor3 c(Q, n);
    for (auto [i, j, k] : products) c(i, j, k) = q(1);
    auto f = AlgebraFile::from(graded_split(AlternativeAlgebra::make(c), Grading{std::move(degrees)}));
    f.description = std::move(description);
    return f;
}

AlgebraFile octonion()
{
    Tensor3 c(Q, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        c(0, i, i) = q(1);
        c(i, 0, i) = q(1);
    }
    for (std::size_t i = 1; i < 8; ++i) c(i, i, 0) = q(-1);
    const std::array<std::array<std::size_t, 3>, 7> triples = {
        {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
    for (auto [a, b, d] : triples)
        for (auto [x, y, z] : {std::array{a, b, d}, std::array{b, d, a}, std::array{d, a, b}}) {
            c(x, y, z) = q(1);
            c(y, x, z) = q(-1);
        }
    auto f = AlgebraFile::from(AlternativeAlgebra::make(c, {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}));
    f.description =
        "Octonions: e0 is the unit, e_i e_i = -e0, e_i e_j = e_k = -e_j e_i for cyclic orders of the "
        "triples (1,2,3),(1,4,5),(1,7,6),(2,4,6),(2,5,7),(3,4,7),(3,6,5)";
    return f;
}

AlgebraFile halved(long long sign, std::string description)
{
    Tensor3 c(Q, 1);
    c(0, 0, 0) = q(sign, 2);
    auto f = AlgebraFile::from(PreAlternativeAlgebra::make(c, c, {"e"}));
    f.description = std::move(description);
    return f;
}

AlgebraFile base_entry(const std::string& name)
{
    if (name.rfind("zero-", 0) == 0) {
        std::string digits = name.substr(5);
        if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos)
            fail("UnknownName", "zero-<n> needs a dimension");
        auto f = AlgebraFile::from(AlternativeAlgebra::zero(Q, std::stoul(digits)));
        f.description = "zero product";
        return f;
    }
    if (name == "n2") return n2();
    if (name == "p2") return graded_from(2, {{0, 0, 1}}, {1, 2}, "graded split of e1 e1 = e2 with degrees (1, 2)");
    if (name == "p3-graded")
        return graded_from(3, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}}, {1, 2, 3},
                           "graded split of e1 e1 = e2, e1 e2 = e2 e1 = e3 with degrees (1, 2, 3)");
    if (name == "octonion") return octonion();
    if (name == "halved-idempotent") return halved(1, "e < e = e > e = e/2; not pre-alternative");
    if (name == "halved-field-negative") return halved(-1, "e < e = e > e = -e/2; not pre-alternative");
    fail("UnknownName", "no catalog entry '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_names()
{
    return {"zero-n", "n2", "p2", "p3-graded", "octonion", "halved-idempotent", "halved-field-negative"};
}

AlgebraFile catalog_entry(const std::string& name)
{
    auto pos = name.rfind("mod");
    if (pos != std::string::npos && pos + 3 < name.size() &&
        name.find_first_not_of("0123456789", pos + 3) == std::string::npos) {
        std::uint64_t p = std::stoull(name.substr(pos + 3));
        if (!is_prime(p) || p == 2) fail("UnknownName", "'" + name + "' needs an odd prime modulus");
        return reduce_mod(base_entry(name.substr(0, pos)), Field::prime(p));
    }
    return base_entry(name);
}

}  // namespace prealt
