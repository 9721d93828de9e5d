#pragma once

#include "prealt/bialg.hpp"

namespace prealt {

// Module data for bimodule-based constructions. Alternative actions fill L, R;
// pre-alternative ones fill Lp, Rp, Ls, Rs.
struct ActionSection {
    std::size_t module_dim = 0;
    std::vector<std::string> module_basis;
    std::optional<Family> L, R, Lp, Rp, Ls, Rs;

    bool is_prealt() const { return Lp.has_value(); }
    AltBimoduleAction alternative(std::size_t algebra_dim) const;
    PreAltBimoduleAction prealternative(std::size_t algebra_dim) const;
    static ActionSection from(const AltBimoduleAction& a, std::vector<std::string> labels = {});
    static ActionSection from(const PreAltBimoduleAction& a, std::vector<std::string> labels = {});
};

// In-memory form of the JSON algebra file; all indices are 0-based.
struct AlgebraFile {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::string description;
    std::optional<Tensor3> mult, prec, succ, alpha, beta, delta;
    std::optional<Mat> form, r;
    std::optional<Mat> op;  // "operator": dim x module_dim
    std::optional<ActionSection> actions;

    bool has_prealt() const { return prec.has_value() && succ.has_value(); }
    // mult, or the associated product when only prec/succ are present. Throws MissingSection.
    AlternativeAlgebra alternative() const;
    PreAlternativeAlgebra prealternative() const;
    ComultiplicationPair comult() const;
    const Mat& need_form() const;
    const Mat& need_r() const;
    const Mat& need_operator() const;
    const ActionSection& need_actions() const;
    const Tensor3& need_delta() const;

    static AlgebraFile from(const AlternativeAlgebra& a);
    static AlgebraFile from(const PreAlternativeAlgebra& p);
};

// Throws Error with code ParseError on malformed input, unknown keys or a version mismatch.
AlgebraFile parse_algebra_file(const std::string& text);
std::string serialize(const AlgebraFile& f);

AlgebraFile read_algebra_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// The image of a rational structure in GF(p); throws BadCharacteristic on a vanishing denominator.
AlgebraFile reduce_mod(const AlgebraFile& f, const Field& target);

}  // namespace prealt
