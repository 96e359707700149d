#include "wtcalc/milnor.hpp"

#include <cstdlib>

namespace wtcalc {

Series series_mul(const Series& a, const Series& b, int max_degree) {
    Series out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            if (wa.size() + wb.size() > static_cast<size_t>(max_degree)) continue;
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Int& slot = out[w];
            slot += ca * cb;
            if (slot == 0) out.erase(w);
        }
    }
    return out;
}

Series magnus(const FreeWord& w, int max_degree) {
    if (max_degree < 0) throw validation_error("magnus: the degree bound must be nonnegative");
    Series out;
    out[Word{}] = 1;
    for (int letter : w.letters) {
        int g = std::abs(letter);
        Series factor;
        if (letter > 0) {
            factor[Word{}] = 1;
            factor[Word{g}] = 1;
        } else {
            // geometric series for (1 + X_g)^-1
            for (int k = 0; k <= max_degree; ++k) factor[Word(k, g)] = k % 2 ? -1 : 1;
        }
        out = series_mul(out, factor, max_degree);
    }
    return out;
}

namespace {

void validate_link(const StringLinkData& link) {
    if (link.strands < 1) throw validation_error("a string link needs at least one strand");
    if (link.longitudes.size() != static_cast<size_t>(link.strands))
        throw validation_error("expected one longitude per strand");
    for (const FreeWord& l : link.longitudes)
        if (max_generator(l) > link.strands)
            throw validation_error("a longitude mentions a strand beyond the strand count");
}

}  // namespace

Int milnor_mu(const StringLinkData& link, const std::vector<int>& multi_index) {
    validate_link(link);
    if (multi_index.size() < 2)
        throw validation_error("the multi-index needs at least two entries");
    for (int i : multi_index)
        if (i < 1 || i > link.strands)
            throw validation_error("multi-index entry outside the strand range");
    int strand = multi_index.back();
    Word w(multi_index.begin(), multi_index.end() - 1);
    Series s = magnus(link.longitudes[strand - 1], static_cast<int>(w.size()));
    auto it = s.find(w);
    return it == s.end() ? Int(0) : it->second;
}

bool TotalMilnor::zero() const { return value.empty(); }

TotalMilnor total_milnor(const StringLinkData& link, int order) {
    validate_link(link);
    if (order < 0) throw validation_error("the order must be nonnegative");
    int m = link.strands;
    int deg = order + 1;

    Int table = 1;
    for (int i = 0; i < deg; ++i) {
        table *= m;
        if (table > 10000000) throw resource_error("the expansion table at this order is too large");
    }
    size_t ncols = static_cast<size_t>(table);
    auto column = [m](const Word& w) {
        size_t c = 0;
        for (int g : w) c = c * m + static_cast<size_t>(g - 1);
        return c;
    };

    const std::vector<RootedPtr>& hall = hall_basis(m, deg);
    if (Int(hall.size()) * Int(ncols) > 50000000)
        throw resource_error("the expansion table at this order is too large");
    IntMatrix expansions(hall.size(), ncols);
    for (size_t i = 0; i < hall.size(); ++i)
        for (const auto& [w, c] : assoc_expand(hall[i])) expansions.at(i, column(w)) = c;

    TotalMilnor out;
    out.order = order;
    out.strands = m;
    LieElement total;
    for (int j = 1; j <= m; ++j) {
        Series s = magnus(link.longitudes[j - 1], deg);
        std::vector<Int> target(ncols);
        for (const auto& [w, c] : s) {
            int d = static_cast<int>(w.size());
            if (d == 0) continue;
            if (d <= order)
                throw validation_error("an invariant of order " + std::to_string(d - 1) +
                                       " does not vanish on strand " + std::to_string(j));
            target[column(w)] = c;
        }
        auto coords = express_in_rows(target, expansions);
        if (!coords)
            throw validation_error("the strand " + std::to_string(j) + " expansion at order " +
                                   std::to_string(order) + " is not a bracket expression");
        LieElement part;
        for (size_t i = 0; i < hall.size(); ++i)
            if ((*coords)[i] != 0) part.free[hall[i]] = (*coords)[i];
        total = lie_add(total, bracket(lie_unit(leaf(j)), part, LieFlavor::lie));
        for (const auto& [h, c] : part.free) out.value.push_back(TensorTerm{c, j, h});
        out.longitude_parts.push_back(std::move(part));
    }
    if (!total.zero()) throw validation_error("the total expansion fails the cycle condition");
    return out;
}

std::vector<RootedPtr> sato_levine(const StringLinkData& link, int order) {
    if (order < 1 || order % 2 == 0)
        throw validation_error("the halving obstruction needs an odd order");
    TotalMilnor tm = total_milnor(link, order + 1);
    return sl_map(tm.value, link.strands);
}

}  // namespace wtcalc
