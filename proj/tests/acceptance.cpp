// Acceptance runner: one line per criterion, every check exact (zero
// tolerance). Exits with the number of failed criteria.

#include <qcube/qcube.hpp>

#include <iostream>
#include <vector>

using namespace qcube;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool pass) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what << "\n";
    if (!pass) ++failures;
}

bool criterion_spectrum_charpoly() {
    const std::vector<std::pair<long, int>> grid = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2},
                                                    {3, 3}, {4, 1}, {4, 2}, {5, 1}, {5, 2}};
    for (const auto& [q, n] : grid)
        if (!verify_spectrum_charpoly(Field(q), n)) return false;
    return true;
}

bool criterion_kac_eigenvectors() {
    for (long q : {2L, 3L, 4L})
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                if (!kac_eigen_residual_is_zero(q, n, k)) return false;
    return true;
}

const std::vector<std::pair<long, int>> kEigenGrid = {{2, 4}, {3, 3}, {4, 2}, {5, 2}};

bool criterion_eigenbasis(std::vector<EigenTower>& towers_out) {
    for (const auto& [q, n] : kEigenGrid) {
        Field F(q);
        EigenTower tower = build_eigen_tower(F, n);
        for (const auto& lvl : tower) {
            if (!verify_counts(F, lvl)) return false;
            if (!verify_eigen_residuals(lvl)) return false;
            if (!verify_orthogonality(lvl)) return false;
        }
        towers_out.push_back(std::move(tower));
    }
    return true;
}

bool criterion_norm_laws(const std::vector<EigenTower>& towers) {
    for (size_t i = 0; i < towers.size(); ++i) {
        Field F(kEigenGrid[i].first);
        if (!verify_norm_coordinate_laws(F, towers[i])) return false;
        for (const auto& lvl : towers[i])
            if (!verify_flip_laws(lvl)) return false;
    }
    return true;
}

bool criterion_closed_form() {
    {
        Field F(2);
        if (!verify_closed_form(F, 3, build_eigen_tower(F, 3)[3])) return false;
    }
    {
        Field F(3);
        if (!verify_closed_form(F, 2, build_eigen_tower(F, 2)[2])) return false;
    }
    return true;
}

bool criterion_radial_span() {
    if (!radial_span_solve(Field(2), 2).contained) return false;
    if (!radial_span_solve(Field(2), 3).contained) return false;
    if (!radial_span_solve(Field(3), 2).contained) return false;
    return true;
}

bool criterion_trees() {
    for (const auto& [q, n] : std::vector<std::pair<long, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        Field F(q);
        if (rooted_count_via_minors(F, n) != tree_weight_formula(q, n)) return false;
    }
    for (const auto& [q, n] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {3, 2}}) {
        Field F(q);
        if (rooted_count_via_enumeration(F, n) != tree_weight_formula(q, n)) return false;
    }
    // reference values pinned by the enumeration oracle
    Field F2(2);
    if (rooted_count_via_enumeration(F2, 1) != 2) return false;
    if (rooted_count_via_enumeration(F2, 2) != 162) return false;
    if (tree_weight_formula(2, 1) != 2 || tree_weight_formula(2, 2) != 162) return false;
    for (int n = 1; n <= 5; ++n)
        if (tree_weight_formula(1, n) != classical_cube_count(n)) return false;
    return true;
}

bool criterion_structural() {
    for (long q : {2L, 3L, 4L, 5L})
        if (!verify_goldman_rota(q, 8)) return false;
    for (const auto& [q, n] :
         std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        Field F(q);
        if (!verify_lifted_matrix_identity(F, n)) return false;
        if (!verify_adjacency_level_recursions(F, n)) return false;
    }
    for (const auto& [q, n] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        Field F(q);
        if (!verify_isotypic_dimension(F, n)) return false;
    }
    return true;
}

}  // namespace

int main() {
    report(1, "characteristic polynomial equals the closed-form factorization on the full grid",
           criterion_spectrum_charpoly());
    report(2, "Kac eigenvector residuals are exactly zero for n <= 6, q in {2,3,4}",
           criterion_kac_eigenvectors());

    std::vector<EigenTower> towers;
    report(3, "eigenbasis: G_q(n) exact eigenvectors, pairwise orthogonal, on the full grid",
           criterion_eigenbasis(towers));
    report(4, "norm and coordinate recursions hold exactly across every tower",
           criterion_norm_laws(towers));
    report(5, "closed-form binary eigenvectors match the recursion with exact boundary values",
           criterion_closed_form());
    report(6, "radial vectors solve exactly in the binary-indexed span", criterion_radial_span());
    report(7, "tree counts: formula = minors = enumeration, with pinned references and q = 1",
           criterion_trees());
    report(8, "structural identities: recurrences, lifted matrix, level recursions, dimensions",
           criterion_structural());

    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures;
}
