#ifndef QRM_TABLES_HPP
#define QRM_TABLES_HPP

// Reference data: the eight degree-2 Lattes maps with their fixed-point
// multipliers, and the expected multiplier-polynomial factorizations used to
// exclude candidate maps.

#include <string>
#include <vector>

namespace qrm {

struct LattesRow {
    std::string lattice;
    int n;
    std::string a;
    std::string b;
    int D;
    /// Fixed-point multipliers, comma separated.
    std::string multipliers;
};

inline const std::vector<LattesRow>& lattes_rows()
{
    static const std::vector<LattesRow> rows = {
        {"Z[i]", 2, "1-i", "0", 1, "-1+i, -1+i, -2i"},
        {"Z[i]", 2, "1+i", "0", 1, "-1-i, -1-i, 2i"},
        {"Z[i]", 4, "1+i", "0", 1, "-4, -1-i, -1+i"},
        {"Z[i√2]", 2, "i√2", "0", 2, "-2, -i√2, i√2"},
        {"Z[(1+i√7)/2]", 2, "(1-i√7)/2", "0", 7, "(-3-i√7)/2, (-3-i√7)/2, (-1+i√7)/2"},
        {"Z[(1+i√7)/2]", 2, "(1-i√7)/2", "1/2", 7, "(-1+i√7)/2, (-1+i√7)/2, (1-i√7)/2"},
        {"Z[(1+i√7)/2]", 2, "(1+i√7)/2", "0", 7, "(-3+i√7)/2, (-3+i√7)/2, (-1-i√7)/2"},
        {"Z[(1+i√7)/2]", 2, "(1+i√7)/2", "1/2", 7, "(-1-i√7)/2, (-1-i√7)/2, (1+i√7)/2"},
    };
    return rows;
}

enum class RowKind {
    /// Map with the listed fixed-point multipliers.
    Triple,
    /// z^2 + c
    Quadratic,
    /// z(z + a)/(z + 1)
    MultipleFixed,
};

struct TableRow {
    std::string table;
    int index; // 1-based within its table
    RowKind kind;
    int D;
    int n;
    /// Multiplier triple (comma separated), c, or a, depending on kind.
    std::string param;
    /// Expected factorization of M_n over R_D.
    std::string expected;

    std::string id() const { return table + "/" + std::to_string(index); }
};

/// Table identifiers, in verification order.
inline const std::vector<std::string>& table_ids()
{
    static const std::vector<std::string> ids = {"cases3", "cases4", "cases5", "super", "simple"};
    return ids;
}

/// Long-form names accepted as aliases of table_ids().
inline std::string canonical_table_id(const std::string& name)
{
    if (name == "proofCases3") return "cases3";
    if (name == "proofCases4") return "cases4";
    if (name == "proofCases5") return "cases5";
    if (name == "proofSuper") return "super";
    if (name == "proofSimple") return "simple";
    return name;
}

inline std::vector<TableRow> reference_rows()
{
    std::vector<TableRow> rows;
    auto add = [&](const std::string& table, RowKind kind, int n, int d, const char* param, const char* expected) {
        int index = 1;
        for (const auto& r : rows) {
            if (r.table == table) {
                ++index;
            }
        }
        rows.push_back(TableRow{table, index, kind, d, n, param, expected});
    };
    const RowKind T = RowKind::Triple;

    // M_3 fails to split while M_1, M_2 split.
    add("cases3", T, 3, 1, "-3-2i, -2+i, -1", "λ^2+(22+4i)λ+121+40i");
    add("cases3", T, 3, 1, "-1-4i, -1, -1+i", "λ^2+(10+12i)λ+5+48i");
    add("cases3", T, 3, 1, "-1-i, -3i, i", "λ^2+(12+2i)λ+15-28i");
    add("cases3", T, 3, 1, "-1, -i, 1+2i", "λ^2+(-2-4i)λ+25+8i");
    add("cases3", T, 3, 2, "-1-2i√2, -1, -1+i√2", "λ^2+(10+4i√2)λ+33+16i√2");
    add("cases3", T, 3, 3, "-3-2i√3, (-3+i√3)/2, -1", "λ^2+(20+6i√3)λ+79+54i√3");
    add("cases3", T, 3, 3, "-2-i√3, -2+i√3, -1", "λ^2+18λ+89");
    add("cases3", T, 3, 3, "-1, -i√3, i√3", "λ^2+2λ+25");
    add("cases3", T, 3, 7, "(-5-i√7)/2, (-5+i√7)/2, -1", "λ^2+22λ+125");
    add("cases3", T, 3, 7, "-2-i√7, (-3+i√7)/2, -1", "λ^2+(16+2i√7)λ+67+14i√7");
    add("cases3", T, 3, 7, "-1, (-1-i√7)/2, i√7", "λ^2+(4-2i√7)λ+19-2i√7");
    add("cases3", T, 3, 15, "(-3-i√15)/2, (-3+i√15)/2, -1", "λ^2+14λ+61");
    add("cases3", T, 3, 15, "-1, (-1-i√15)/2, (-1+i√15)/2", "λ^2+6λ+29");

    // M_4 fails to split while M_1, M_2, M_3 split.
    add("cases4", T, 4, 1, "-2-i, -2i, i", "(λ-1)(λ^2+(6+12i)λ+41+60i)");
    add("cases4", T, 4, 1, "-1-2i, -1, -1+2i", "(λ-11)(λ^2+12λ+211)");
    add("cases4", T, 4, 2, "-2, -1-i√2, -1+i√2", "(λ-1)(λ^2+2λ+37)");
    add("cases4", T, 4, 3, "(-7-i√3)/2, -1-i√3, (-1+i√3)/2",
        "λ^3+((99-3i√3)/2)λ^2+((1449+9i√3)/2)λ+4267+768i√3");
    add("cases4", T, 4, 3, "-2-2i√3, (-3-i√3)/2, (-1+i√3)/2",
        "(λ+(1+7i√3)/2)(λ^2+(5-i√3)λ+(95-17i√3)/2)");
    add("cases4", T, 4, 3, "-2-i√3, (-1-i√3)/2, i√3", "(λ+8+5i√3)(λ^2+(-19-i√3)λ-62+65i√3)");
    add("cases4", T, 4, 3, "-2, (-1-3i√3)/2, (-1+i√3)/2",
        "λ^3+((39-7i√3)/2)λ^2+((261-19i√3)/2)λ+449-302i√3");
    add("cases4", T, 4, 3, "-1, (-1-i√3)/2, 1+2i√3", "λ^3+(33-12i√3)λ^2+(-297-132i√3)λ+103+1392i√3");
    add("cases4", T, 4, 3, "(-1-i√3)/2, (1+i√3)/2, 1-i√3",
        "λ^3+((27+27i√3)/2)λ^2+((-423+39i√3)/2)λ+883+624i√3");
    add("cases4", T, 4, 7, "-3, (-1-i√7)/2, (-1+i√7)/2", "λ^3+25λ^2+187λ+587");
    add("cases4", T, 4, 7, "-1, (1-i√7)/2, (1+i√7)/2", "λ^3+λ^2-5λ-413");

    // M_5 fails to split while M_1, ..., M_4 split.
    add("cases5", T, 5, 1, "-2-i, -2-i, -1+i", "(λ^3+(10+23i)λ^2+(33+188i)λ+758+1703i)^2");
    add("cases5", T, 5, 1, "-1-2i, -1-2i, i", "(λ^3+(-5+32i)λ^2+(-633-640i)λ+605-11584i)^2");
    add("cases5", T, 5, 1, "-i, -i, 1+i", "(λ^3+(4+31i)λ^2+(-171-176i)λ-700+1699i)^2");
    add("cases5", T, 5, 2, "-1-i√2, -1-i√2, i√2", "(λ^3+(3+3i√2)λ^2+(-27-42i√2)λ+3-343i√2)^2");
    add("cases5", T, 5, 3, "-2-i√3, -2-i√3, (-1+i√3)/2",
        "(λ^3+(-12-21i√3)λ^2+(-573+36i√3)λ-8380+2709i√3)^2");
    add("cases5", T, 5, 3, "(-3-i√3)/2, (-3-i√3)/2, -1+i√3",
        "(λ^3+((15-5i√3)/2)λ^2+((-87-169i√3)/2)λ-320-709i√3)^2");
    add("cases5", T, 5, 3, "(-1-i√3)/2, (-1-i√3)/2, 1+i√3",
        "(λ^3+((3-3i√3)/2)λ^2+((-147+45i√3)/2)λ-577-720i√3)^2");
    add("cases5", T, 5, 3, "-i√3, -i√3, (1+i√3)/2",
        "(λ^3+(42-29i√3)λ^2+(-1329-232i√3)λ-7742+4897i√3)^2");

    // M_4 of z^2 + c.
    const RowKind Q = RowKind::Quadratic;
    add("super", Q, 4, 1, "-3/4", "λ^3-39λ^2+939λ-5221");
    add("super", Q, 4, 1, "1/2", "λ^3-44λ^2+784λ-8896");
    add("super", Q, 4, 2, "1/4", "λ^3-47λ^2+779λ-4861");
    add("super", Q, 4, 3, "(-1-3i√3)/8", "λ^3+((-109+3i√3)/2)λ^2+((1177+15i√3)/2)λ-2983-1218i√3");
    add("super", Q, 4, 3, "(-1+3i√3)/8", "λ^3+((-109-3i√3)/2)λ^2+((1177-15i√3)/2)λ-2983+1218i√3");

    // M_4 of z(z + a)/(z + 1).
    const RowKind M = RowKind::MultipleFixed;
    add("simple", M, 4, 2, "-1", "λ^3-15λ^2+255λ-1457");
    add("simple", M, 4, 2, "0", "λ^3-47λ^2+779λ-4861");
    add("simple", M, 4, 3, "(-1-i√3)/2", "λ^3+(-21+14i√3)λ^2+(99-124i√3)λ-1279+542i√3");
    add("simple", M, 4, 3, "(-1+i√3)/2", "λ^3+(-21-14i√3)λ^2+(99+124i√3)λ-1279-542i√3");
    return rows;
}

} // namespace qrm

#endif // QRM_TABLES_HPP
