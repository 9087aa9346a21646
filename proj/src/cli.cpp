#include "rbx/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbx/errors.hpp"
#include "rbx/families.hpp"
#include "rbx/rota_baxter.hpp"
#include "rbx/spec_io.hpp"

namespace rbx {

using nlohmann::ordered_json;

namespace {

struct GlobalFlags {
    std::string format = "text";
    std::uint64_t budget = 100000;
    std::uint64_t seed = 0;

    CheckOptions options() const {
        CheckOptions o;
        if (budget > 0) o.budget = budget;
        o.seed = seed;
        return o;
    }
};

struct Carrier {
    std::string input;
    FiniteDimAlgebra algebra;
    std::optional<HopfAlgebra> hopf;
    std::optional<CoxeterSystem> coxeter;
};

Carrier resolve_carrier(const std::string& arg, bool verify, const CheckOptions& opts) {
    if (is_family_descriptor(arg)) {
        FamilyBundle b = build_family(arg, verify, opts);
        return Carrier{arg, std::move(b.algebra), std::move(b.hopf), std::move(b.coxeter)};
    }
    LoadedAlgebra l = load_algebra_file(arg);
    return Carrier{arg, std::move(l.algebra), std::move(l.hopf), std::nullopt};
}

// Collects the machine report and the human rendering side by side; both
// carry the same data, timing appears only in the human rendering.
struct Report {
    ordered_json j;
    std::vector<std::string> lines;

    void line(const std::string& s) { lines.push_back(s); }
};

void emit(const Report& r, const GlobalFlags& flags, std::ostream& out,
          std::chrono::steady_clock::time_point start) {
    if (flags.format == "json") {
        out << r.j.dump(2) << "\n";
        return;
    }
    for (const auto& l : r.lines) out << l << "\n";
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    out << "elapsed: " << ms << " ms\n";
}

void describe_carrier(Report& r, const Carrier& c) {
    r.j["input"] = c.input;
    r.j["dim"] = c.algebra.dim();
    r.j["ring"] = c.algebra.ring().to_json();
    r.j["hopf"] = c.hopf.has_value();
    r.line("carrier: " + c.input + "  (dim " + std::to_string(c.algebra.dim()) + " over " +
           c.algebra.ring().name() + (c.hopf ? ", Hopf)" : ")"));
}

void note_sampling(Report& r, const Carrier& c, const GlobalFlags& flags) {
    CheckOptions opts = flags.options();
    std::uint64_t triples = static_cast<std::uint64_t>(c.algebra.dim()) * c.algebra.dim() *
                            static_cast<std::uint64_t>(c.algebra.dim());
    if (opts.sampled(c.algebra.dim(), triples)) {
        r.j["budget"] = flags.budget;
        r.j["seed"] = flags.seed;
        r.line("sampling: budget " + std::to_string(flags.budget) + ", seed " +
               std::to_string(flags.seed) + " (carrier above the exhaustive cap)");
    }
}

ordered_json sparse_element_json(const FiniteDimAlgebra& a, const AlgebraElement& x) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < a.dim(); ++i)
        if (!x.coeff(i).is_zero())
            out.push_back(ordered_json::array({a.basis().name(i), x.coeff(i).to_json()}));
    return out;
}

ordered_json tensor_json(const FiniteDimAlgebra& a, const StructureConstants& sc) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < sc.dim(); ++i)
        for (int j = 0; j < sc.dim(); ++j) {
            const auto& terms = sc.product(i, j);
            if (terms.empty()) continue;
            ordered_json list = ordered_json::array();
            for (const ScTerm& t : terms)
                list.push_back(ordered_json::array({a.basis().name(t.k), t.c.to_json()}));
            out.push_back(ordered_json::array({a.basis().name(i), a.basis().name(j), list}));
        }
    return out;
}

std::string render_product(const FiniteDimAlgebra& a, const StructureConstants& sc, int i, int j) {
    AlgebraElement x(sc.ring(), sc.dim());
    for (const ScTerm& t : sc.product(i, j)) x.set_coeff(t.k, t.c);
    return render_element(a, x);
}

void product_table_lines(Report& r, const FiniteDimAlgebra& a, const StructureConstants& sc,
                         const std::string& opname) {
    for (int i = 0; i < sc.dim(); ++i)
        for (int j = 0; j < sc.dim(); ++j) {
            if (sc.product(i, j).empty()) continue;
            r.line("  " + a.basis().name(i) + " " + opname + " " + a.basis().name(j) + " = " +
                   render_product(a, sc, i, j));
        }
}

// Named elements available in expressions, resolved lazily from the text.
NamedElements named_elements_for(const Carrier& c, const std::string& expr) {
    NamedElements named;
    if (c.coxeter) {
        for (int s = 1; s <= c.coxeter->rank; ++s)
            named.emplace("C[s" + std::to_string(s) + "]", kl_generator(c.algebra, *c.coxeter, s));
    }
    if (c.hopf) {
        if (expr.find("xH") != std::string::npos) named.emplace("xH", trace_element(*c.hopf));
        if (expr.find("integral") != std::string::npos) {
            auto basis = integrals(*c.hopf, IntegralSide::Left);
            if (basis.empty()) throw VerificationError("carrier has no nonzero left integral");
            if (basis[0].ring() == c.algebra.ring()) named.emplace("integral", basis[0]);
        }
    }
    return named;
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& input, const GlobalFlags& flags, std::ostream& out,
              std::chrono::steady_clock::time_point start) {
    CheckOptions opts = flags.options();
    Carrier c = resolve_carrier(input, /*verify=*/false, opts);
    Report r;
    r.j["command"] = "check";
    describe_carrier(r, c);
    note_sampling(r, c, flags);

    ordered_json checks = ordered_json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        ordered_json e;
        e["name"] = name;
        e["status"] = pass ? "pass" : "fail";
        if (!pass && !detail.empty()) e["violation"] = detail;
        checks.push_back(e);
        r.line(name + ": " + (pass ? "pass" : "FAIL" + (detail.empty() ? "" : " " + detail)));
        all_pass = all_pass && pass;
    };

    const Basis& b = c.algebra.basis();
    if (auto v = check_associativity(c.algebra.constants(), opts))
        record("associativity", false,
               "at (" + b.name(v->i) + ", " + b.name(v->j) + ", " + b.name(v->k) + ")");
    else
        record("associativity", true, "");
    record("unit", check_unit(c.algebra), "");

    if (c.hopf) {
        if (auto v = check_coassociativity(*c.hopf))
            record("coassociativity", false, "at " + b.name(*v));
        else
            record("coassociativity", true, "");
        if (auto v = check_counit(*c.hopf))
            record("counit", false, "at " + b.name(*v));
        else
            record("counit", true, "");
        if (auto v = check_bialgebra(*c.hopf, opts))
            record("bialgebra", false,
                   v->i >= 0 ? "at (" + b.name(v->i) + ", " + b.name(v->j) + ")" : "on the unit");
        else
            record("bialgebra", true, "");
        if (auto v = check_antipode(*c.hopf))
            record("antipode", false,
                   "at " + b.name(v->k) + (v->left ? " (left convolution)" : " (right convolution)"));
        else
            record("antipode", true, "");
    }
    r.j["checks"] = std::move(checks);
    r.j["status"] = all_pass ? "pass" : "fail";
    r.line(all_pass ? "all checks passed" : "checks FAILED");
    emit(r, flags, out, start);
    return all_pass ? 0 : 1;
}

int cmd_trace_element(const std::string& input, const GlobalFlags& flags, std::ostream& out,
                      std::chrono::steady_clock::time_point start) {
    CheckOptions opts = flags.options();
    Carrier c = resolve_carrier(input, /*verify=*/true, opts);
    if (!c.hopf) throw std::invalid_argument("trace-element needs a Hopf structure on '" + input + "'");
    Report r;
    r.j["command"] = "trace-element";
    describe_carrier(r, c);

    AlgebraElement x = trace_element(*c.hopf);
    Scalar eps = counit_of(*c.hopf, x);
    bool cocomm = is_cocommutative_element(*c.hopf, x);
    r.j["element"] = render_element(c.algebra, x);
    r.j["coefficients"] = sparse_element_json(c.algebra, x);
    r.j["counit_value"] = eps.to_json();
    r.j["counit_value_text"] = eps.str();
    r.j["counit_equals_dim"] = "pass";
    r.j["square_identity"] = "pass";
    r.j["cocommutative"] = cocomm;
    r.j["status"] = "pass";
    r.line("x_H = " + render_element(c.algebra, x));
    r.line("eps(x_H) = " + eps.str());
    r.line("eps(x_H) = dim H: pass");
    r.line("x_H^2 = eps(x_H) x_H: pass");
    r.line(std::string("x_H cocommutative: ") + (cocomm ? "yes" : "no"));
    emit(r, flags, out, start);
    return 0;
}

int cmd_integrals(const std::string& input, const std::string& side, const GlobalFlags& flags,
                  std::ostream& out, std::chrono::steady_clock::time_point start) {
    CheckOptions opts = flags.options();
    if (side != "left" && side != "right")
        throw std::invalid_argument("--side must be left or right, got '" + side + "'");
    Carrier c = resolve_carrier(input, /*verify=*/true, opts);
    if (!c.hopf) throw std::invalid_argument("integrals needs a Hopf structure on '" + input + "'");
    Report r;
    r.j["command"] = "integrals";
    describe_carrier(r, c);
    r.j["side"] = side;

    IntegralSide s = side == "left" ? IntegralSide::Left : IntegralSide::Right;
    auto basis = integrals(*c.hopf, s);
    bool lifted = !c.algebra.ring().is_field();
    r.j["ring_lifted"] = lifted;
    if (lifted) r.line("note: Laurent carrier lifted to " + ScalarRing::ratfun().name() + " for elimination");
    r.j["dimension"] = basis.size();
    ordered_json elems = ordered_json::array();
    for (const auto& v : basis) {
        elems.push_back(render_element(c.algebra, v));
        r.line(side + " integral: " + render_element(c.algebra, v));
    }
    r.j["elements"] = std::move(elems);
    r.j["status"] = "pass";
    r.line("integral space dimension: " + std::to_string(basis.size()));
    emit(r, flags, out, start);
    return 0;
}

int cmd_rb(const std::string& input, const std::string& expr, bool table, bool matrix,
           const GlobalFlags& flags, std::ostream& out,
           std::chrono::steady_clock::time_point start) {
    CheckOptions opts = flags.options();
    Carrier c = resolve_carrier(input, /*verify=*/true, opts);
    Report r;
    r.j["command"] = "rb";
    describe_carrier(r, c);
    note_sampling(r, c, flags);
    r.j["element_expression"] = expr;

    NamedElements named = named_elements_for(c, expr);
    AlgebraElement xi = parse_element(c.algebra, expr, named);
    r.j["element"] = render_element(c.algebra, xi);
    r.line("xi = " + render_element(c.algebra, xi));

    Scalar weight = [&] {
        try {
            return quasi_idempotent_weight(c.algebra, xi);
        } catch (const VerificationError&) {
            AlgebraElement sq = c.algebra.multiply(xi, xi);
            r.j["status"] = "fail";
            r.j["reason"] = "not quasi-idempotent";
            r.j["xi_squared"] = render_element(c.algebra, sq);
            r.line("xi is not quasi-idempotent: xi^2 = " + render_element(c.algebra, sq) +
                   " is not proportional to xi");
            emit(r, flags, out, start);
            throw;
        }
    }();

    RotaBaxterOperator op = rb_from_element(c.algebra, xi, opts);
    r.j["weight"] = weight.to_json();
    r.j["weight_text"] = weight.str();
    r.line("weight = " + weight.str());
    r.j["rb_identity"] = "pass";
    r.line("Rota-Baxter identity on basis pairs: pass");
    bool qi_op = check_quasi_idempotent_operator(op.matrix, op.weight);
    r.j["quasi_idempotent_operator"] = qi_op ? "pass" : "fail";
    r.line(std::string("P^2 = -weight P: ") + (qi_op ? "pass" : "FAIL"));

    if (table) {
        ordered_json tbl = ordered_json::array();
        for (int i = 0; i < c.algebra.dim(); ++i) {
            AlgebraElement img(c.algebra.ring(), c.algebra.dim());
            for (int k = 0; k < c.algebra.dim(); ++k) img.set_coeff(k, op.matrix.at(k, i));
            tbl.push_back(
                ordered_json::array({c.algebra.basis().name(i), render_element(c.algebra, img)}));
            r.line("P(" + c.algebra.basis().name(i) + ") = " + render_element(c.algebra, img));
        }
        r.j["table"] = std::move(tbl);
    }
    if (matrix) {
        // Operator exchange format: column-major by basis index, column j
        // holds the coordinates of P(e_j).
        ordered_json cols = ordered_json::array();
        for (int j = 0; j < c.algebra.dim(); ++j) {
            ordered_json col = ordered_json::array();
            for (int i = 0; i < c.algebra.dim(); ++i) col.push_back(op.matrix.at(i, j).to_json());
            cols.push_back(std::move(col));
        }
        r.j["operator"] =
            ordered_json{{"dim", c.algebra.dim()}, {"weight", weight.to_json()}, {"matrix", std::move(cols)}};
        if (flags.format != "json") {
            for (int i = 0; i < c.algebra.dim(); ++i) {
                std::string row = "  [";
                for (int j = 0; j < c.algebra.dim(); ++j)
                    row += (j ? ", " : "") + op.matrix.at(i, j).str();
                r.line(row + "]");
            }
        }
    }
    r.j["status"] = "pass";
    r.line("verified Rota-Baxter operator of weight " + weight.str());
    emit(r, flags, out, start);
    return 0;
}

int cmd_tridend(const std::string& input, const std::string& expr, const GlobalFlags& flags,
                std::ostream& out, std::chrono::steady_clock::time_point start) {
    CheckOptions opts = flags.options();
    Carrier c = resolve_carrier(input, /*verify=*/true, opts);
    Report r;
    r.j["command"] = "tridend";
    describe_carrier(r, c);
    note_sampling(r, c, flags);
    r.j["element_expression"] = expr;

    NamedElements named = named_elements_for(c, expr);
    AlgebraElement xi = parse_element(c.algebra, expr, named);
    r.j["element"] = render_element(c.algebra, xi);
    r.line("xi = " + render_element(c.algebra, xi));
    Scalar weight = quasi_idempotent_weight(c.algebra, xi);
    r.j["weight"] = weight.to_json();
    r.j["weight_text"] = weight.str();
    r.line("weight = " + weight.str());

    if (weight.is_zero()) {
        RotaBaxterOperator op = rb_from_element(c.algebra, xi, opts);
        DendriformStructure d = derive_dendriform(c.algebra, op, opts);
        r.j["kind"] = "dendriform";
        r.j["axioms_checked"] = 3;
        r.j["axioms"] = "pass";
        r.line("weight 0: dendriform branch, 3/3 axioms pass");
        StructureConstants star = star_product(d);
        bool star_assoc = !check_associativity(star, opts).has_value();
        r.j["star_associative"] = star_assoc ? "pass" : "fail";
        r.line(std::string("star product associative: ") + (star_assoc ? "pass" : "FAIL"));
        r.j["products"] = ordered_json{{"left", tensor_json(c.algebra, d.left)},
                                       {"right", tensor_json(c.algebra, d.right)}};
        r.line("left products (a < b = a P(b)):");
        product_table_lines(r, c.algebra, d.left, "<");
        r.line("right products (a > b = P(a) b):");
        product_table_lines(r, c.algebra, d.right, ">");
        r.j["status"] = star_assoc ? "pass" : "fail";
        emit(r, flags, out, start);
        return star_assoc ? 0 : 1;
    }

    TridendriformStructure t = derive_tridendriform(c.algebra, xi, weight, opts);
    r.j["kind"] = "tridendriform";
    r.j["ring_lifted"] = t.lifted;
    if (t.lifted)
        r.line("note: Laurent carrier lifted to " + ScalarRing::ratfun().name() +
               " (weight is not a Laurent unit)");
    r.j["axioms_checked"] = 7;
    r.j["axioms"] = "pass";
    r.line("7/7 tridendriform axioms pass");
    StructureConstants star = star_product(t);
    bool star_assoc = !check_associativity(star, opts).has_value();
    r.j["star_associative"] = star_assoc ? "pass" : "fail";
    r.line(std::string("star product associative: ") + (star_assoc ? "pass" : "FAIL"));
    r.j["products"] = ordered_json{{"left", tensor_json(c.algebra, t.left)},
                                   {"right", tensor_json(c.algebra, t.right)},
                                   {"dot", tensor_json(c.algebra, t.dot)}};
    r.line("left products (a < b = weight^-1 a xi b):");
    product_table_lines(r, c.algebra, t.left, "<");
    r.line("right products (a > b = weight^-1 xi a b):");
    product_table_lines(r, c.algebra, t.right, ">");
    r.line("dot products (a . b = ab):");
    product_table_lines(r, c.algebra, t.dot, ".");
    r.j["status"] = star_assoc ? "pass" : "fail";
    emit(r, flags, out, start);
    return star_assoc ? 0 : 1;
}

int cmd_export(const std::string& family, const std::string& path, const GlobalFlags& flags,
               std::ostream& out, std::chrono::steady_clock::time_point start) {
    CheckOptions opts = flags.options();
    if (!is_family_descriptor(family))
        throw std::invalid_argument("export needs a builtin family descriptor, got '" + family + "'");
    FamilyBundle b = build_family(family, /*verify=*/true, opts);
    ordered_json doc = algebra_to_json(b.algebra, b.hopf ? &*b.hopf : nullptr);
    write_algebra_file(path, doc);

    Report r;
    r.j["command"] = "export";
    r.j["input"] = family;
    r.j["path"] = path;
    r.j["dim"] = b.algebra.dim();
    r.j["ring"] = b.algebra.ring().to_json();
    r.j["hopf"] = b.hopf.has_value();
    r.j["bytes"] = doc.dump(2).size() + 1;
    r.j["status"] = "pass";
    r.line("exported " + family + " to " + path + " (" + std::to_string(doc.dump(2).size() + 1) +
           " bytes)");
    emit(r, flags, out, start);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    GlobalFlags flags;

    CLI::App app{"exact Rota-Baxter operators, Hopf trace elements and integrals, and derived "
                 "tridendriform structures on finite-dimensional algebras"};
    app.name("rbx");
    app.fallthrough(true);
    app.require_subcommand(1);
    app.add_option("--format", flags.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", flags.budget,
                   "max sampled tuples for exhaustive checks above dim 64 (0 = always exhaustive)")
        ->capture_default_str();
    app.add_option("--seed", flags.seed, "seed for sampled checks")->capture_default_str();

    std::string input, expr, side = "left", path;
    bool table = false, matrix = false;

    CLI::App* c_check = app.add_subcommand("check", "run associativity/unit (and Hopf) checks");
    c_check->add_option("carrier", input, "family descriptor or spec file")->required();

    CLI::App* c_trace = app.add_subcommand("trace-element", "compute and verify the trace element x_H");
    c_trace->add_option("carrier", input, "family descriptor or spec file")->required();

    CLI::App* c_int = app.add_subcommand("integrals", "compute a basis of the integral space");
    c_int->add_option("carrier", input, "family descriptor or spec file")->required();
    c_int->add_option("--side", side, "left or right")->capture_default_str();

    CLI::App* c_rb = app.add_subcommand("rb", "build and verify the Rota-Baxter operator P_xi");
    c_rb->add_option("carrier", input, "family descriptor or spec file")->required();
    c_rb->add_option("element", expr, "element expression, e.g. \"2*1 + 2*x\" or \"C[s1]\"")
        ->required();
    c_rb->add_flag("--table", table, "print P(e_i) for every basis element");
    c_rb->add_flag("--matrix", matrix, "print the operator matrix (column-major)");

    CLI::App* c_tri = app.add_subcommand("tridend", "derive the tridendriform/dendriform structure");
    c_tri->add_option("carrier", input, "family descriptor or spec file")->required();
    c_tri->add_option("element", expr, "quasi-idempotent element expression")->required();

    CLI::App* c_exp = app.add_subcommand("export", "write a builtin family as an algebra spec file");
    c_exp->add_option("family", input, "family descriptor")->required();
    c_exp->add_option("path", path, "output file")->required();

    std::vector<const char*> argv;
    argv.push_back("rbx");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "rbx: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_check->parsed()) return cmd_check(input, flags, out, start);
        if (c_trace->parsed()) return cmd_trace_element(input, flags, out, start);
        if (c_int->parsed()) return cmd_integrals(input, side, flags, out, start);
        if (c_rb->parsed()) return cmd_rb(input, expr, table, matrix, flags, out, start);
        if (c_tri->parsed()) return cmd_tridend(input, expr, flags, out, start);
        if (c_exp->parsed()) return cmd_export(input, path, flags, out, start);
        err << "rbx: no command\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "rbx: verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "rbx: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "rbx: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "rbx: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "rbx: error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rbx
