#include "hecke/errors.hpp"
#include "hecke/hecke_rep.hpp"

namespace hecke {

namespace {

void check_index(const HeckeRep& rep, Family family, int i) {
    const int n = rep.sites();
    const int lo = family == Family::A ? 1 : 0;
    if (i < lo || i > n - 1) {
        throw IndexOutOfRange("Murphy index " + std::to_string(i) + " outside " + std::to_string(lo) + ".." +
                              std::to_string(n - 1) + " for family " + to_string(family));
    }
}

PolyMatrix murphy_a(const HeckeRep& rep, int i) {
    if (i == 0) return rep.identity();
    PolyMatrix j = rep.gen(1) * rep.gen(1);
    for (int k = 2; k <= i; ++k) j = rep.gen(k) * j * rep.gen(k);
    return j;
}

PolyMatrix murphy_a_inv(const HeckeRep& rep, int i) {
    if (i == 0) return rep.identity();
    PolyMatrix j = rep.gen_inv(1) * rep.gen_inv(1);
    for (int k = 2; k <= i; ++k) j = rep.gen_inv(k) * j * rep.gen_inv(k);
    return j;
}

PolyMatrix murphy_c0(const HeckeRep& rep) {
    const int n = rep.sites();
    PolyMatrix j = rep.identity();
    for (int k = 1; k <= n - 1; ++k) j = j * rep.gen_inv(k);
    j = j * rep.gN();
    for (int k = n - 1; k >= 1; --k) j = j * rep.gen(k);
    return j * rep.g0();
}

PolyMatrix murphy_c0_inv(const HeckeRep& rep) {
    const int n = rep.sites();
    PolyMatrix j = rep.g0_inv();
    for (int k = 1; k <= n - 1; ++k) j = j * rep.gen_inv(k);
    j = j * rep.gN_inv();
    for (int k = n - 1; k >= 1; --k) j = j * rep.gen(k);
    return j;
}

std::vector<const PolyMatrix*> family_generators(const HeckeRep& rep, Family family, std::vector<std::string>& names) {
    std::vector<const PolyMatrix*> out;
    if (family != Family::A) {
        out.push_back(&rep.g0());
        names.emplace_back("g_0");
    }
    for (int i = 1; i < rep.sites(); ++i) {
        out.push_back(&rep.gen(i));
        names.push_back("g_" + std::to_string(i));
    }
    if (family == Family::C || family == Family::TL2B) {
        out.push_back(&rep.gN());
        names.emplace_back("g_N");
    }
    return out;
}

PolyMatrix power(const PolyMatrix& a, int m, const PolyMatrix& id) {
    PolyMatrix out = id;
    for (int k = 0; k < m; ++k) out = out * a;
    return out;
}

}  // namespace

PolyMatrix murphy(const HeckeRep& rep, Family family, int i, BRecursion rec) {
    check_index(rep, family, i);
    switch (family) {
        case Family::A: return murphy_a(rep, i);
        case Family::B:
            if (i == 0) return rep.g0();
            if (rec == BRecursion::AsPrinted) return rep.gen(i) * murphy_a(rep, i - 1) * rep.gen(i);
            return rep.gen(i) * murphy(rep, family, i - 1, rec) * rep.gen(i);
        case Family::C:
        case Family::TL2B: {
            PolyMatrix j = murphy_c0(rep);
            for (int k = 1; k <= i; ++k) j = rep.gen(k) * j * rep.gen(k);
            return j;
        }
    }
    throw IndexOutOfRange("unknown family");
}

PolyMatrix murphy_inverse(const HeckeRep& rep, Family family, int i, BRecursion rec) {
    check_index(rep, family, i);
    switch (family) {
        case Family::A: return murphy_a_inv(rep, i);
        case Family::B:
            if (i == 0) return rep.g0_inv();
            if (rec == BRecursion::AsPrinted) return rep.gen_inv(i) * murphy_a_inv(rep, i - 1) * rep.gen_inv(i);
            return rep.gen_inv(i) * murphy_inverse(rep, family, i - 1, rec) * rep.gen_inv(i);
        case Family::C:
        case Family::TL2B: {
            PolyMatrix j = murphy_c0_inv(rep);
            for (int k = 1; k <= i; ++k) j = rep.gen_inv(k) * j * rep.gen_inv(k);
            return j;
        }
    }
    throw IndexOutOfRange("unknown family");
}

std::vector<PolyMatrix> murphy_family(const HeckeRep& rep, Family family) {
    std::vector<PolyMatrix> out;
    if (family == Family::A) {
        if (rep.sites() < 2) return out;
        out.push_back(murphy(rep, family, 1));
    } else {
        out.push_back(murphy(rep, family, 0));
    }
    const int start = static_cast<int>(family == Family::A);
    for (int i = start + 1; i < rep.sites(); ++i) out.push_back(rep.gen(i) * out.back() * rep.gen(i));
    return out;
}

CheckReport check_pairwise_commutation(std::span<const PolyMatrix> elements, int first_index) {
    CheckReport r;
    r.name = "murphy_commutation";
    ScopedTimer timer(r);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            const std::string pair = "pair (" + std::to_string(first_index + static_cast<int>(i)) + "," +
                                     std::to_string(first_index + static_cast<int>(j)) + ")";
            if (!r.expect_equal(elements[i] * elements[j], elements[j] * elements[i], "RelationFailure", pair)) return r;
        }
    }
    return r;
}

CheckReport check_murphy_commutation(const HeckeRep& rep, Family family) {
    const auto js = murphy_family(rep, family);
    CheckReport r = check_pairwise_commutation(js, family == Family::A ? 1 : 0);
    r.name = "murphy_commutation_" + to_string(family);
    r.params = rep.echo();
    r.details["elements"] = std::to_string(js.size());
    return r;
}

CheckReport check_symmetric_commutant(const HeckeRep& rep, Family family, int max_power) {
    if (max_power < 1) throw IndexOutOfRange("power sums need max_power >= 1");
    CheckReport r;
    r.name = "symmetric_commutant_" + to_string(family);
    r.params = rep.echo();
    ScopedTimer timer(r);
    const bool laurent = family == Family::C || family == Family::TL2B;
    const auto js = murphy_family(rep, family);
    std::vector<PolyMatrix> inv;
    if (laurent) {
        for (int i = 0; i < rep.sites(); ++i) inv.push_back(murphy_inverse(rep, family, i));
    }
    std::vector<std::string> names;
    const auto gens = family_generators(rep, family, names);
    const PolyMatrix id = rep.identity();
    for (int m = 1; m <= max_power; ++m) {
        PolyMatrix p(rep.site_layout());
        for (std::size_t i = 0; i < js.size(); ++i) {
            p += power(js[i], m, id);
            if (laurent) p += power(inv[i], m, id);
        }
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const std::string rel = "power sum m=" + std::to_string(m) + " with " + names[k];
            if (!r.expect_equal(p * *gens[k], *gens[k] * p, "RelationFailure", rel)) return r;
        }
    }
    r.details["power_sum"] = laurent ? "sum_i J_i^m + J_i^-m" : "sum_i J_i^m";
    return r;
}

}  // namespace hecke
