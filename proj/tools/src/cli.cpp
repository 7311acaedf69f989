#include "kmb/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "kmb/adjoint.hpp"
#include "kmb/bounded_generation.hpp"
#include "kmb/boundedness.hpp"
#include "kmb/sl2.hpp"

namespace kmb::cli {

namespace {

using Table = std::vector<std::vector<std::string>>;

std::string render_table(const std::vector<std::string>& header, const Table& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j + 1 == cells.size()) {
                s += cells[j];
            } else {
                s += cells[j] + std::string(width[j] - cells[j].size() + 2, ' ');
            }
        }
        out << s << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : rows) line(row);
    return out.str();
}

std::string key_values(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::size_t width = 0;
    for (const auto& [k, v] : pairs) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : pairs) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return out.str();
}

template <class R>
std::string vector_string(const std::vector<R>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += Scalar<R>::to_string(v[i]);
    }
    return s + ")";
}

template <class R>
Record vector_record(const std::vector<R>& v) {
    Record r = Record::array();
    for (const auto& x : v) r.push_back(Scalar<R>::to_string(x));
    return r;
}

std::vector<std::string> split_list(const std::string& text, const std::string& what) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw UsageError("empty item in " + what + " list '" + text + "'");
        items.push_back(item);
    }
    if (items.empty()) throw UsageError(what + " list is empty");
    return items;
}

FieldPtr field_from_options(const Options& o) {
    if (!o.min_poly) throw UsageError("this command needs --min-poly");
    std::vector<Integer> coeffs;
    for (const auto& item : split_list(*o.min_poly, "min-poly")) {
        if (item.find_first_not_of("+-0123456789") != std::string::npos)
            throw UsageError("min-poly coefficient '" + item + "' is not an integer");
        try {
            coeffs.emplace_back(item[0] == '+' ? item.substr(1) : item);
        } catch (const std::invalid_argument&) {
            throw UsageError("min-poly coefficient '" + item + "' is not an integer");
        }
    }
    return make_number_field(std::move(coeffs));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read input file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<RawMatrix> collect_matrices(const Command& c) {
    std::vector<RawMatrix> out;
    for (const auto& arg : c.arguments) out.push_back(parse_matrix_argument(arg));
    if (c.options.input) {
        auto from_file = parse_matrix_file(read_file(*c.options.input));
        out.insert(out.end(), from_file.begin(), from_file.end());
    }
    return out;
}

RawMatrix single_matrix(const Command& c) {
    auto all = collect_matrices(c);
    if (all.size() != 1)
        throw UsageError(c.name + " needs exactly one matrix, got " + std::to_string(all.size()));
    return all.front();
}

RingTag ring_option(const Command& c, RingTag fallback, const std::vector<RingTag>& allowed) {
    RingTag tag = fallback;
    if (c.options.ring) {
        auto parsed = ring_tag_from_string(*c.options.ring);
        if (!parsed) throw UsageError("unknown ring tag '" + *c.options.ring + "'");
        tag = *parsed;
    }
    if (std::find(allowed.begin(), allowed.end(), tag) == allowed.end())
        throw UsageError(c.name + " does not accept matrices over ring " + to_string(tag));
    return tag;
}

Matrix<RationalFunction> function_matrix(const RawMatrix& raw) {
    return materialize<RationalFunction>(raw, RingTag::function_field,
                                         [](const std::string& e) { return parse_rational_function(e); });
}

Matrix<NFElement> nf_matrix(const RawMatrix& raw, const FieldPtr& field) {
    return materialize<NFElement>(raw, RingTag::number_field, [&](const std::string& e) { return parse_nf(e, field); });
}

Report ok(const Command& c, std::string text, Record record) {
    Record full;
    full["command"] = c.name;
    full["status"] = "ok";
    for (auto& [k, v] : record.items()) full[k] = v;
    return {kExitSuccess, std::move(text), std::move(full)};
}

// ---- commands

Report cmd_embed(const Command& c) {
    const EmbeddingSpec spec{c.options.group_size, c.options.window};
    const auto g = function_matrix(single_matrix(c));
    const SemidirectElement image = embed_element(g, spec);
    const auto block = image.block_matrix();
    const DegreeProfile p = degree_profile(block);
    std::string text = key_values({{"spec", "m=" + std::to_string(spec.group_size) + " window=" + std::to_string(spec.window)},
                                   {"input", to_string(g)},
                                   {"ad_part", to_string(image.ad_part)},
                                   {"vec_part", vector_string(image.vec_part)},
                                   {"image", to_string(block)},
                                   {"deg_t", std::to_string(p.deg_t)},
                                   {"deg_tinv", std::to_string(p.deg_tinv)}});
    Record r;
    r["spec"] = {{"group_size", spec.group_size}, {"window", spec.window}};
    r["input"] = matrix_record(g, RingTag::function_field);
    r["ad_part"] = matrix_record(image.ad_part, RingTag::function_field);
    r["vec_part"] = vector_record(image.vec_part);
    r["image"] = matrix_record(block, RingTag::laurent);
    r["profile"] = {{"deg_t", p.deg_t}, {"deg_tinv", p.deg_tinv}};
    return ok(c, std::move(text), std::move(r));
}

Report cmd_probe(const Command& c) {
    const EmbeddingSpec spec{c.options.group_size, c.options.window};
    std::vector<int> degrees;
    if (c.options.target_degree) {
        degrees.push_back(*c.options.target_degree);
    } else {
        for (int d = 1; d <= spec.window; ++d) degrees.push_back(d);
    }
    Table rows;
    Record witnesses = Record::array();
    for (int d : degrees) {
        const auto w = certify_unbounded_embedding(spec, d);
        rows.push_back({std::to_string(d), w.element_word, std::to_string(w.profile.deg_t),
                        std::to_string(w.profile.deg_tinv), std::to_string(w.witness_degree())});
        witnesses.push_back({{"target_degree", d},
                             {"element", w.element_word},
                             {"deg_t", w.profile.deg_t},
                             {"deg_tinv", w.profile.deg_tinv},
                             {"witness_degree", w.witness_degree()}});
    }
    std::string text = "spec  m=" + std::to_string(spec.group_size) + " window=" + std::to_string(spec.window) + "\n" +
                       render_table({"D", "element", "deg_t", "deg_tinv", "witness"}, rows);
    Record r;
    r["spec"] = {{"group_size", spec.group_size}, {"window", spec.window}};
    r["witnesses"] = std::move(witnesses);
    return ok(c, std::move(text), std::move(r));
}

std::string verdict_name(CyclicVerdict v) {
    switch (v) {
        case CyclicVerdict::bounded: return "BOUNDED";
        case CyclicVerdict::unbounded: return "UNBOUNDED";
        case CyclicVerdict::undetermined: return "UNDETERMINED";
    }
    return "?";
}

Report cmd_growth(const Command& c) {
    ring_option(c, RingTag::laurent, {RingTag::laurent});
    const auto raws = collect_matrices(c);
    if (raws.empty()) throw UsageError("growth needs at least one generator");
    std::vector<LaurentMatrix> gens;
    for (const auto& raw : raws)
        gens.push_back(materialize<LaurentPolynomial>(raw, RingTag::laurent,
                                                      [](const std::string& e) { return parse_laurent(e); }));
    const GrowthReport report = growth_explore(gens, c.options.max_length);
    Table rows;
    Record r;
    Record gen_records = Record::array();
    for (const auto& g : gens) gen_records.push_back(matrix_record(g, RingTag::laurent));
    r["generators"] = std::move(gen_records);
    r["max_length"] = c.options.max_length;
    Record row_records = Record::array();
    for (const auto& row : report.rows) {
        rows.push_back({std::to_string(row.length), std::to_string(row.count), std::to_string(row.max_abs_deg_t),
                        std::to_string(row.max_abs_deg_tinv)});
        row_records.push_back({{"length", row.length},
                               {"count", row.count},
                               {"max_abs_deg_t", row.max_abs_deg_t},
                               {"max_abs_deg_tinv", row.max_abs_deg_tinv}});
    }
    r["rows"] = std::move(row_records);
    std::string text = render_table({"length", "count", "max|deg_t|", "max|deg_tinv|"}, rows);
    if (gens.size() == 1) {
        const CyclicCertificate cert = certify_cyclic(gens.front());
        text += "cyclic  " + verdict_name(cert.verdict) + " (" + cert.reason + ")\n";
        r["cyclic"] = {{"verdict", verdict_name(cert.verdict)}, {"reason", cert.reason}};
        if (cert.bound) r["cyclic"]["bound"] = *cert.bound;
    }
    return ok(c, std::move(text), std::move(r));
}

template <class R>
Report bruhat_report(const Command& c, const Matrix<R>& g, RingTag tag) {
    const ElementaryWord<R> word = bruhat_decompose_sl2(g);
    const bool verified = word.evaluate() == g;
    const BruhatCell cell = bruhat_cell(g);
    const std::string cell_name = cell == BruhatCell::borel ? "T U+" : "U+ T s U+";
    std::string text = key_values({{"input", to_string(g)},
                                   {"cell", cell_name},
                                   {"word", word.to_string()},
                                   {"length", std::to_string(word.size()) + " (budget " + std::to_string(kElementaryBudget) + ")"},
                                   {"verification", verified ? "PASS" : "FAIL"}});
    Record r;
    r["input"] = matrix_record(g, tag);
    r["cell"] = cell_name;
    Record factors = Record::array();
    for (const auto& f : word.factors())
        factors.push_back({{"kind", f.kind == ElementaryKind::upper ? "u+" : "u-"}, {"parameter", Scalar<R>::to_string(f.parameter)}});
    r["factors"] = std::move(factors);
    r["length"] = word.size();
    r["budget"] = kElementaryBudget;
    r["verified"] = verified;
    Report report = ok(c, std::move(text), std::move(r));
    if (!verified) report.exit_code = kExitDomainError;
    return report;
}

Report cmd_bruhat(const Command& c) {
    const RingTag tag = ring_option(c, RingTag::rational, {RingTag::rational, RingTag::function_field, RingTag::number_field});
    const RawMatrix raw = single_matrix(c);
    switch (tag) {
        case RingTag::rational:
            return bruhat_report(c, materialize<Rational>(raw, tag, [](const std::string& e) { return parse_rational(e); }), tag);
        case RingTag::function_field: return bruhat_report(c, function_matrix(raw), tag);
        default: return bruhat_report(c, nf_matrix(raw, field_from_options(c.options)), tag);
    }
}

Report cmd_decompose(const Command& c) {
    ring_option(c, RingTag::number_field, {RingTag::number_field});
    const FieldPtr field = field_from_options(c.options);
    const NFMatrix g = nf_matrix(single_matrix(c), field);
    const DecompositionCertificate cert = decompose_3n0(g, field, c.options.level);
    const bool verified = verify_certificate(cert, g).empty();
    Table rows;
    Record factors = Record::array();
    for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        const auto& f = cert.factors[i];
        rows.push_back({std::to_string(i + 1), to_string(f.tag), f.label, to_string(f.matrix)});
        factors.push_back({{"tag", to_string(f.tag)}, {"label", f.label}, {"matrix", matrix_record(f.matrix, RingTag::number_field)}});
    }
    std::string text = key_values({{"field", field->to_string()},
                                   {"input", to_string(g)},
                                   {"level", std::to_string(cert.level)}}) +
                       render_table({"#", "tag", "factor", "matrix"}, rows) +
                       key_values({{"length", std::to_string(cert.factors.size()) + " (budget " + std::to_string(cert.budget) + ")"},
                                   {"verification", verified ? "PASS" : "FAIL"}});
    Record r;
    r["min_poly"] = vector_record(std::vector<Rational>(field->min_poly().begin(), field->min_poly().end()));
    r["input"] = matrix_record(g, RingTag::number_field);
    r["level"] = cert.level;
    r["factors"] = std::move(factors);
    r["length"] = cert.factors.size();
    r["budget"] = cert.budget;
    r["verified"] = verified;
    return ok(c, std::move(text), std::move(r));
}

Report cmd_primitive(const Command& c) {
    const FieldPtr field = field_from_options(c.options);
    const int powers = c.options.powers.value_or(field->degree());
    const PrimitiveSearchResult result = primitive_power_search(field, powers);
    Table rows;
    Record checks = Record::array();
    for (int p = 1; p <= powers; ++p) {
        const NFElement yp = result.y.pow(p);
        const bool prim = is_primitive(yp, *field);
        rows.push_back({std::to_string(p), yp.to_string(), prim ? "yes" : "no"});
        checks.push_back({{"power", p}, {"value", yp.to_string()}, {"primitive", prim}});
    }
    std::string text = key_values({{"field", field->to_string()},
                                   {"y", result.y.to_string()},
                                   {"offset", std::to_string(result.offset)},
                                   {"candidates", std::to_string(result.candidates_tried)}}) +
                       render_table({"p", "y^p", "primitive"}, rows);
    Record r;
    r["min_poly"] = vector_record(std::vector<Rational>(field->min_poly().begin(), field->min_poly().end()));
    r["y"] = result.y.to_string();
    r["offset"] = result.offset;
    r["candidates_tried"] = result.candidates_tried;
    r["powers"] = std::move(checks);
    return ok(c, std::move(text), std::move(r));
}

Report cmd_vandermonde(const Command& c) {
    if (!c.options.points) throw UsageError("vandermonde needs --points");
    if (c.arguments.size() != 1) throw UsageError("vandermonde needs exactly one target polynomial in t");
    std::vector<Rational> points;
    for (const auto& p : split_list(*c.options.points, "points")) points.push_back(parse_rational(p));
    const LaurentPolynomial target = parse_laurent(c.arguments.front());
    std::vector<Rational> coeffs;
    for (const auto& [e, coeff] : target.coefficients()) {
        if (e < 0) throw MathError(Errc::invalid_argument, "target must be a polynomial in t, got " + target.to_string());
        if (!coeff.is_constant()) throw MathError(Errc::invalid_argument, "target coefficients must be rational");
        if (coeffs.size() <= static_cast<std::size_t>(e)) coeffs.resize(static_cast<std::size_t>(e) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(e)] = coeff.constant_value();
    }
    const int k = static_cast<int>(points.size()) - 1;
    const auto solution = vandermonde_span_solve(points, k, coeffs);
    LaurentPolynomial expanded;
    for (std::size_t i = 0; i < points.size(); ++i) {
        LaurentPolynomial base = LaurentPolynomial::t() - LaurentPolynomial(RationalFunction(points[i]));
        LaurentPolynomial power(1);
        for (int e = 0; e < k; ++e) power = power * base;
        expanded = expanded + LaurentPolynomial(RationalFunction(solution[i])) * power;
    }
    const bool verified = expanded == target;
    Table rows;
    Record sol = Record::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        rows.push_back({to_string(points[i]), to_string(solution[i])});
        sol.push_back({{"point", to_string(points[i])}, {"coefficient", to_string(solution[i])}});
    }
    std::string text = key_values({{"k", std::to_string(k)}, {"target", target.to_string()}}) +
                       render_table({"a_i", "c_i"}, rows) + key_values({{"verification", verified ? "PASS" : "FAIL"}});
    Record r;
    r["k"] = k;
    r["target"] = target.to_string();
    r["solution"] = std::move(sol);
    r["verified"] = verified;
    return ok(c, std::move(text), std::move(r));
}

Report cmd_double_embed(const Command& c) {
    ring_option(c, RingTag::number_field, {RingTag::number_field});
    const FieldPtr field = field_from_options(c.options);
    const NFMatrix g = nf_matrix(single_matrix(c), field);
    const DoubleEmbeddingResult result = double_embedding_orbit(g, field);
    const std::string verdict = result.verdict == OrbitVerdict::preserves ? "PRESERVES" : "MOVES";
    std::string text = key_values({{"field", field->to_string()},
                                   {"input", to_string(g)},
                                   {"psi", to_string(result.psi)},
                                   {"image(1,0,1,0)", vector_string(result.images[0])},
                                   {"image(0,1,0,1)", vector_string(result.images[1])},
                                   {"verdict", verdict}});
    Record r;
    r["min_poly"] = vector_record(std::vector<Rational>(field->min_poly().begin(), field->min_poly().end()));
    r["input"] = matrix_record(g, RingTag::number_field);
    r["psi"] = matrix_record(result.psi, RingTag::number_field);
    r["images"] = {vector_record(result.images[0]), vector_record(result.images[1])};
    r["verdict"] = verdict;
    return ok(c, std::move(text), std::move(r));
}

using Handler = Report (*)(const Command&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"embed", cmd_embed},         {"probe", cmd_probe},         {"growth", cmd_growth},
        {"bruhat", cmd_bruhat},       {"decompose", cmd_decompose}, {"primitive", cmd_primitive},
        {"vandermonde", cmd_vandermonde}, {"double-embed", cmd_double_embed}};
    return table;
}

Report error_report(const Command& c, int exit_code, const std::string& code, const std::string& message) {
    std::string input;
    for (const auto& a : c.arguments) input += (input.empty() ? "" : " ") + a;
    if (c.options.input) input += (input.empty() ? "" : " ") + std::string("--input ") + *c.options.input;
    if (c.options.points) input += (input.empty() ? "" : " ") + std::string("--points ") + *c.options.points;
    if (c.options.min_poly) input += (input.empty() ? "" : " ") + std::string("--min-poly ") + *c.options.min_poly;
    std::string text = (exit_code == kExitUsageError ? "usage error" : "error") + std::string(" [") + code + "]: " + message + "\n";
    if (!input.empty()) text += "  input: " + input + "\n";
    Record r;
    r["command"] = c.name;
    r["status"] = exit_code == kExitUsageError ? "usage_error" : "domain_error";
    r["code"] = code;
    r["message"] = message;
    r["input"] = input;
    return {exit_code, std::move(text), std::move(r)};
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"embed",     "probe",     "growth",      "bruhat",
                                                "decompose", "primitive", "vandermonde", "double-embed"};
    return names;
}

void validate(const Command& c) {
    if (!handlers().contains(c.name)) throw UsageError("unknown command '" + c.name + "'");
    const Options& o = c.options;
    if (o.window < 1) throw UsageError("--window must be at least 1");
    if (o.group_size < 2) throw UsageError("--group-size must be at least 2");
    if (o.level < 1) throw UsageError("--level must be at least 1");
    if (o.powers && *o.powers < 1) throw UsageError("--powers must be at least 1");
    if (o.ring && !ring_tag_from_string(*o.ring)) throw UsageError("unknown ring tag '" + *o.ring + "'");
    const bool takes_matrices = c.name != "probe" && c.name != "primitive" && c.name != "vandermonde";
    if (takes_matrices && c.arguments.empty() && !o.input)
        throw UsageError(c.name + " needs a matrix argument or --input");
    if (!takes_matrices && c.name != "vandermonde" && !c.arguments.empty())
        throw UsageError(c.name + " takes no positional arguments");
    if ((c.name == "decompose" || c.name == "primitive" || c.name == "double-embed") && !o.min_poly)
        throw UsageError(c.name + " needs --min-poly");
}

std::string Report::render(Format format) const {
    if (format == Format::record) return record.dump(2) + "\n";
    return text;
}

Report run_command(const Command& c) {
    try {
        validate(c);
        return handlers().at(c.name)(c);
    } catch (const UsageError& e) {
        return error_report(c, kExitUsageError, "usage", e.what());
    } catch (const ParseError& e) {
        return error_report(c, kExitUsageError, std::string(to_string(e.code())), e.what());
    } catch (const MathError& e) {
        return error_report(c, kExitDomainError, std::string(to_string(e.code())), e.what());
    } catch (const std::exception& e) {
        return error_report(c, kExitDomainError, "internal", e.what());
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with loop-group embeddings, degree boundedness and bounded generation", "kmb"};
    app.require_subcommand(1);
    Command command;
    Options& o = command.options;
    std::string format_name = "text";

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format: text or record")
            ->check(CLI::IsMember({"text", "record"}))
            ->capture_default_str();
    };
    auto add_matrix_input = [&](CLI::App* sub, const std::string& what) {
        sub->allow_extras();
        sub->footer("Positional arguments: " + what);
        sub->add_option("--input", o.input, "File with matrix records (JSON) or inline matrices, one per line");
    };
    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--window", o.window, "Derivation window radius M")->capture_default_str();
        sub->add_option("--group-size", o.group_size, "Source group SL_m size m")->capture_default_str();
    };

    auto* embed = app.add_subcommand("embed", "Embed g in SL_m(k) into the semidirect product and report its degree profile");
    add_matrix_input(embed, "Matrix over k, inline [[..],[..]] or a JSON record");
    add_spec(embed);
    add_format(embed);

    auto* probe = app.add_subcommand("probe", "Torus witnesses of unbounded degree for D = 1..M");
    add_spec(probe);
    probe->add_option("--target-degree", o.target_degree, "Only certify this degree D");
    add_format(probe);

    auto* growth = app.add_subcommand("growth", "Breadth-first degree growth of a matrix group over k[t, t^-1]");
    add_matrix_input(growth, "Generators over k[t, t^-1]");
    growth->add_option("--max-length", o.max_length, "Maximal word length L")->capture_default_str();
    add_format(growth);

    auto* bruhat = app.add_subcommand("bruhat", "Write g in SL_2 as a product of at most 11 elementary matrices");
    add_matrix_input(bruhat, "2x2 matrix with determinant 1");
    bruhat->add_option("--ring", o.ring, "Ring of the matrix entries: Q, k or nf")->capture_default_str();
    bruhat->add_option("--min-poly", o.min_poly, "Minimal polynomial coefficients, constant term first (ring nf)");
    add_format(bruhat);

    auto* decompose = app.add_subcommand("decompose", "Bounded-generation certificate for g in SL_2 over a number field");
    add_matrix_input(decompose, "2x2 matrix over the number field (generator a)");
    decompose->add_option("--min-poly", o.min_poly, "Minimal polynomial coefficients, constant term first");
    decompose->add_option("--level", o.level, "Congruence level N")->capture_default_str();
    add_format(decompose);

    auto* primitive = app.add_subcommand("primitive", "Search y = a + i with y, ..., y^n all primitive");
    primitive->add_option("--min-poly", o.min_poly, "Minimal polynomial coefficients, constant term first");
    primitive->add_option("--powers", o.powers, "Number of powers to test (default: field degree)");
    add_format(primitive);

    auto* vandermonde = app.add_subcommand("vandermonde", "Write a polynomial as a combination of (t - a_i)^k");
    vandermonde->allow_extras();
    vandermonde->footer("Positional argument: target polynomial in t with rational coefficients");
    vandermonde->add_option("--points", o.points, "Distinct rational points a_0, ..., a_k, comma separated");
    add_format(vandermonde);

    auto* double_embed = app.add_subcommand("double-embed", "Does block-diag(g, sigma(g)) preserve the diagonal subspace?");
    add_matrix_input(double_embed, "2x2 matrix over a quadratic field");
    double_embed->add_option("--min-poly", o.min_poly, "Minimal polynomial coefficients, constant term first");
    add_format(double_embed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help on a subcommand
            for (auto* sub : app.get_subcommands()) out << sub->help();
            if (app.get_subcommands().empty()) out << app.help();
            return kExitSuccess;
        }
        err << "usage error: " << e.what() << "\n";
        err << "run 'kmb --help' for usage\n";
        return kExitUsageError;
    }
    o.format = format_name == "record" ? Format::record : Format::text;
    CLI::App* chosen = app.get_subcommands().front();
    command.name = chosen->get_name();
    for (const auto& arg : chosen->remaining()) {
        if (arg.rfind("--", 0) == 0 || (arg.size() == 2 && arg[0] == '-' && std::isalpha(static_cast<unsigned char>(arg[1])))) {
            err << "usage error: unknown option " << arg << " for " << command.name << "\n";
            err << "run 'kmb " << command.name << " --help' for usage\n";
            return kExitUsageError;
        }
        command.arguments.push_back(arg);
    }

    const Report report = run_command(command);
    if (report.exit_code != kExitSuccess && o.format == Format::text) {
        err << report.text;
    } else {
        out << report.render(o.format);
    }
    return report.exit_code;
}

}  // namespace kmb::cli
