#include "cgc/io.hpp"

#include <algorithm>
#include <sstream>

#include "cgc/registry.hpp"

namespace cgc {

namespace {

json codes_of(const std::vector<Elem>& v) {
    json out = json::array();
    for (Elem e : v) out.push_back(e.code);
    return out;
}

json minor_json(const MinorWitness& w) { return {{"rows", w.rows}, {"cols", w.cols}}; }

}  // namespace

std::string join_codes(const std::vector<std::uint32_t>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

json field_json(const Field& f) {
    json j = {{"p", f.p()}, {"n", f.n()}, {"q", f.q()}, {"modulus", f.modulus()}, {"description", f.describe()}};
    if (auto name = field_name(f)) j["name"] = *name;
    return j;
}

json matrix_json(const Matrix& a) { return {{"q", a.field().q()}, {"rows", a.rows()}, {"entries", a.codes()}}; }

json poly_json(const QuotientElement& a) {
    const auto& r = a.ring();
    return {{"ring", {{"q", r.field().q()}, {"m", r.m()}, {"lambda", r.lambda().code}}}, {"coeffs", a.codes()}};
}

json spec_json(const CirculantSpec& spec) {
    return {{"field", spec.field.describe()},
            {"q", spec.field.q()},
            {"m", spec.m},
            {"g", spec.g},
            {"lambda", spec.lambda.code},
            {"h", codes_of(spec.h)},
            {"theta_exp", spec.theta_exp},
            {"well_defined", spec.well_defined()},
            {"classify", std::string(to_string(classify(spec)))},
            {"text", format_spec(spec)}};
}

json report_json(const CheckReport& r) {
    json conds = json::object();
    for (const auto& c : r.conditions) conds[c.name] = c.value;
    json j = {{"verdict", r.verdict},
              {"conditions", conds},
              {"witness", nullptr},
              {"hypothesis_mode", std::string(to_string(r.hypothesis_mode))},
              {"consistent", r.consistent}};
    if (r.hypothesis) j["hypothesis"] = {{"exact", r.hypothesis->exact}, {"relaxed", r.hypothesis->relaxed}};
    if (r.witness) {
        const Witness& w = *r.witness;
        json wj = {{"kind", std::string(to_string(w.kind))}};
        if (w.kind == Witness::Kind::Residue) {
            wj["q"] = w.codes;
            wj["image"] = w.image;
        } else if (w.kind == Witness::Kind::Product) {
            wj["product"] = w.codes;
        } else if (w.minor) {
            wj.update(minor_json(*w.minor));
        }
        j["witness"] = wj;
    }
    return j;
}

json semi_involutory_json(const SemiInvolutory& s) {
    json j = {{"found", s.found}};
    if (s.found) {
        j["d1"] = codes_of(s.d1);
        j["d2"] = codes_of(s.d2);
    } else {
        j["reason"] = s.reason;
    }
    return j;
}

json formula_json(const FormulaCount& c) {
    return {{"N", c.n},
            {"units_product_formula", c.units.product_formula},
            {"units_local_ring", c.units.local_ring},
            {"product_value", c.product_value},
            {"local_value", c.local_value}};
}

json exhaustive_json(const ExhaustiveCount& c) {
    return {{"unit_count", c.unit_count},
            {"pair_count", c.pair_count},
            {"distinct_matrix_count", c.distinct_matrix_count},
            {"samples", c.samples}};
}

json hit_json(const SearchHit& h) {
    return {{"h", h.h}, {"h_inv", h.h_inv}, {"weights", {h.weight_h, h.weight_inv}}};
}

json census_row_json(const CensusRow& row) {
    json j = {{"row", row.index},
              {"m", row.m},
              {"q", row.field.q()},
              {"field", row.field.describe()},
              {"lambda", row.lambda.code},
              {"r", row.r},
              {"factorization", row.factorization},
              {"N", row.n},
              {"product_formula_count", row.product_formula_count},
              {"local_ring_count", row.local_ring_count},
              {"squarefree", row.squarefree()},
              {"printed",
               {{"N", row.printed_n},
                {"degrees", row.printed_degrees},
                {"total", row.printed_total},
                {"arithmetic", row.printed_arithmetic}}},
              {"formula_matches_printed", row.formula_matches_printed()},
              {"local_matches_printed", row.local_matches_printed()},
              {"exhaustive_pair_count", nullptr},
              {"distinct_matrix_count", nullptr},
              {"exhaustive_unit_count", nullptr}};
    if (row.exhaustive) {
        j["exhaustive_pair_count"] = row.exhaustive->pair_count;
        j["distinct_matrix_count"] = row.exhaustive->distinct_matrix_count;
        j["exhaustive_unit_count"] = row.exhaustive->unit_count;
    }
    return j;
}

std::string pretty_matrix(const Matrix& a) {
    const std::string sym = generator_symbol(a.field());
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (Elem e : a.entries()) {
        cells.push_back(render_element(a.field(), e, sym));
        width = std::max(width, cells.back().size());
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::string& c = cells[i * a.cols() + j];
            os << std::string(width - c.size(), ' ') << c << (j + 1 < a.cols() ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

std::string pretty_census(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "row " << r.index << ": m=" << r.m << " q=" << r.field.q() << " lambda=" << r.lambda.code
           << " r=" << r.r << "\n"
           << "  x^" << r.m << " - lambda = " << r.factorization << "\n"
           << "  N = " << r.n << " (printed " << r.printed_n << ")\n"
           << "  product formula: " << r.n << " x " << r.product_formula_count / std::max<std::uint64_t>(r.n, 1) << " = "
           << r.product_formula_count << "\n"
           << "  local ring:    " << r.n << " x " << r.local_ring_count / std::max<std::uint64_t>(r.n, 1) << " = "
           << r.local_ring_count << "\n"
           << "  printed total: " << r.printed_total << " (printed factorization gives " << r.printed_arithmetic
           << ")\n";
        if (r.exhaustive)
            os << "  exhaustive:    " << r.exhaustive->pair_count << " pairs, " << r.exhaustive->distinct_matrix_count
               << " distinct matrices\n";
        os << "  agreement: formula " << (r.formula_matches_printed() ? "yes" : "NO") << ", local ring "
           << (r.local_matches_printed() ? "yes" : "NO") << "\n";
    }
    return os.str();
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "row,m,q,lambda,r,factorization,N,product_formula_count,local_ring_count,printed_total,printed_arithmetic,"
          "exhaustive_pair_count,distinct_matrix_count,formula_matches_printed,local_matches_printed\n";
    for (const auto& r : rows) {
        os << r.index << ',' << r.m << ',' << r.field.q() << ',' << r.lambda.code << ',' << r.r << ",\""
           << r.factorization << "\"," << r.n << ',' << r.product_formula_count << ',' << r.local_ring_count << ','
           << r.printed_total << ',' << r.printed_arithmetic << ',';
        if (r.exhaustive) os << r.exhaustive->pair_count << ',' << r.exhaustive->distinct_matrix_count;
        else os << ',';
        os << ',' << (r.formula_matches_printed() ? "true" : "false") << ','
           << (r.local_matches_printed() ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string hits_csv(const std::vector<SearchHit>& hits) {
    std::ostringstream os;
    os << "h,h_inv,weight_h,weight_inv\n";
    for (const auto& h : hits)
        os << '"' << join_codes(h.h) << "\",\"" << join_codes(h.h_inv) << "\"," << h.weight_h << ',' << h.weight_inv
           << '\n';
    return os.str();
}

std::string matrix_csv(const Matrix& a) {
    std::ostringstream os;
    for (const auto& row : a.codes()) os << join_codes(row) << '\n';
    return os.str();
}

}  // namespace cgc
