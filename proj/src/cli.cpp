#include "valgebra/cli.hpp"

#include "valgebra/corpus.hpp"
#include "valgebra/deformation.hpp"
#include "valgebra/io.hpp"
#include "valgebra/polarization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>

namespace valgebra {

namespace {

using nlohmann::json;

struct Options {
	std::string format = "human";
	bool structured() const { return format == "structured"; }
};

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw) {
	std::map<std::string, Rational> params;
	for (const std::string& p : raw) {
		std::size_t eq = p.find('=');
		if (eq == std::string::npos || eq == 0)
			throw std::invalid_argument("--param expects name=rational, got '" + p + "'");
		params[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
	}
	return params;
}

json witness_json(const IdentityReport& r) {
	json rec = {{"name", r.name}, {"holds", r.holds}};
	if (r.witness) {
		rec["witness_indices"] = {r.witness->i, r.witness->j, r.witness->k, r.witness->l};
		rec["witness_value"] = r.witness->value.str();
	} else {
		rec["witness_indices"] = nullptr;
		rec["witness_value"] = nullptr;
	}
	return rec;
}

void print_report(std::ostream& out, const Options& opt, const IdentityReport& r,
                  const std::vector<std::string>* basis = nullptr) {
	if (opt.structured()) {
		out << witness_json(r).dump() << "\n";
		return;
	}
	out << r.name << ": " << (r.holds ? "holds" : "fails");
	if (r.witness) {
		const Witness& w = *r.witness;
		if (basis && w.i < basis->size())
			out << "  witness (" << (*basis)[w.i] << "," << (*basis)[w.j] << ","
			    << (*basis)[w.k] << " -> " << (*basis)[w.l] << ") = " << w.value;
		else
			out << "  witness (" << w.i << "," << w.j << "," << w.k << " -> " << w.l
			    << ") = " << w.value;
	}
	out << "\n";
}

int exit_code_of(const std::vector<IdentityReport>& reports) {
	for (const IdentityReport& r : reports)
		if (!r.holds)
			return 1;
	return 0;
}

void print_table(std::ostream& out, const MultTable& t,
                 const std::vector<std::string>& basis, const std::string& label) {
	out << label << ":\n";
	bool any = false;
	for (std::size_t i = 0; i < t.dim; ++i)
		for (std::size_t j = 0; j < t.dim; ++j) {
			std::string rhs;
			for (std::size_t k = 0; k < t.dim; ++k) {
				const Rational& x = t.at(i, j, k);
				if (x.is_zero())
					continue;
				Rational mag = x.sign() < 0 ? -x : x;
				rhs += rhs.empty() ? (x.sign() < 0 ? "-" : "") : (x.sign() < 0 ? " - " : " + ");
				if (!(mag == Rational(1)))
					rhs += mag.str() + " ";
				rhs += basis[k];
			}
			if (!rhs.empty()) {
				out << "  " << basis[i] << " " << basis[j] << " = " << rhs << "\n";
				any = true;
			}
		}
	if (!any)
		out << "  (zero)\n";
}

void print_matrix(std::ostream& out, const QMatrix& m) {
	for (std::size_t i = 0; i < m.rows; ++i) {
		out << "  [";
		for (std::size_t j = 0; j < m.cols; ++j)
			out << (j ? " " : "") << m.at(i, j);
		out << "]\n";
	}
}

json matrix_json(const QMatrix& m) {
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows; ++i) {
		json row = json::array();
		for (std::size_t j = 0; j < m.cols; ++j)
			row.push_back(m.at(i, j).str());
		rows.push_back(row);
	}
	return rows;
}

json group_vector_json(const GroupVector& v) {
	json a = json::array();
	for (const Rational& x : v.c)
		a.push_back(x.str());
	return a;
}

int cmd_classify(const std::string& file, const Options& opt, std::ostream& out) {
	WorkbenchInput input = parse_input(file);
	std::vector<IdentityReport> reports = classify(input.table);
	for (const IdentityReport& r : reports)
		print_report(out, opt, r, &input.basis);
	return exit_code_of(reports);
}

int cmd_check(const std::string& file, const std::string& vexpr, const std::string& wexpr,
              const std::string& mode, const std::map<std::string, Rational>& params,
              const Options& opt, std::ostream& out) {
	WorkbenchInput input = parse_input(file);
	GroupVector v = parse_group_vector(vexpr, params);
	IdentityReport r;
	if (wexpr.empty()) {
		r = is_v_associative(input.table, v);
	} else {
		GroupVector w = parse_group_vector(wexpr, params);
		r = is_vw_algebra(input.table, v, w,
		                  mode == "pair" ? VwMode::pair : VwMode::diff);
	}
	print_report(out, opt, r, &input.basis);
	return r.holds ? 0 : 1;
}

int cmd_rank(const std::string& vexpr, const std::map<std::string, Rational>& params,
             const Options& opt, std::ostream& out) {
	GroupVector v = parse_group_vector(vexpr, params);
	if (opt.structured())
		out << json{{"vector", group_vector_json(v)}, {"rank", rank_v(v)}}.dump() << "\n";
	else
		out << "rank: " << rank_v(v) << "\n";
	return 0;
}

int cmd_orbit(const std::string& vexpr, const std::map<std::string, Rational>& params,
              const Options& opt, std::ostream& out) {
	GroupVector v = parse_group_vector(vexpr, params);
	auto o = orbit(v);
	if (opt.structured()) {
		json arr = json::array();
		for (const GroupVector& t : o)
			arr.push_back(group_vector_json(t));
		out << json{{"orbit", arr}}.dump() << "\n";
		return 0;
	}
	for (int s = 0; s < 6; ++s)
		out << perm_names[static_cast<std::size_t>(s)] << " . v = "
		    << format_group_vector(o[static_cast<std::size_t>(s)]) << "\n";
	return 0;
}

int cmd_mv(const std::string& vexpr, const std::map<std::string, Rational>& params,
           const Options& opt, std::ostream& out) {
	GroupVector v = parse_group_vector(vexpr, params);
	QMatrix m = mv_matrix(v);
	std::vector<QVector> kernel = kernel_basis(m);
	std::optional<QVector> cert = solve(m, to_qvector(named_vector("V_Lad")));
	if (opt.structured()) {
		json rec = {{"matrix", matrix_json(m)},
		            {"rank", rank(m)},
		            {"v_lad_in_image", cert.has_value()}};
		json kb = json::array();
		for (const QVector& k : kernel)
			kb.push_back(group_vector_json(group_vector_from(k)));
		rec["kernel_basis"] = kb;
		if (cert)
			rec["certificate"] = group_vector_json(group_vector_from(*cert));
		out << rec.dump() << "\n";
		return 0;
	}
	out << "M_v:\n";
	print_matrix(out, m);
	out << "rank: " << rank(m) << "\n";
	out << "kernel basis:";
	if (kernel.empty())
		out << " (empty)";
	out << "\n";
	for (const QVector& k : kernel)
		out << "  " << format_group_vector(group_vector_from(k)) << "\n";
	out << "V_Lad in image: " << (cert ? "yes" : "no") << "\n";
	if (cert)
		out << "certificate v1: " << format_group_vector(group_vector_from(*cert))
		    << "  (v1 v = V_Lad)\n";
	return 0;
}

int cmd_deform(const std::string& file, const std::string& vexpr, const std::string& wexpr,
               std::size_t order, const std::map<std::string, Rational>& params,
               const Options& opt, std::ostream& out) {
	WorkbenchInput input = parse_input(file);
	Jet jet = input.jets.empty() ? make_jet({input.table}) : input.jets.front();
	jet.terms.resize(order + 1, MultTable(jet.dim()));
	GroupVector v = parse_group_vector(vexpr, params);
	std::vector<IdentityReport> reports;
	if (wexpr.empty()) {
		reports = verify_jet(jet, v);
	} else {
		GroupVector w = parse_group_vector(wexpr, params);
		reports = verify_jet_vw(jet, v, w);
	}
	for (const IdentityReport& r : reports)
		print_report(out, opt, r, &input.basis);
	return exit_code_of(reports);
}

int cmd_delta2_kernel(const std::string& file, const std::string& vexpr,
                      const std::map<std::string, Rational>& params, const Options& opt,
                      std::ostream& out) {
	WorkbenchInput input = parse_input(file);
	GroupVector v = parse_group_vector(vexpr, params);
	std::vector<MultTable> basis = delta2_kernel(v, input.table);
	if (opt.structured()) {
		json arr = json::array();
		for (const MultTable& t : basis) {
			json coeffs = json::array();
			for (const Rational& x : t.c)
				coeffs.push_back(x.str());
			arr.push_back(coeffs);
		}
		out << json{{"kernel_dimension", basis.size()}, {"basis", arr}}.dump() << "\n";
		return 0;
	}
	out << "kernel dimension: " << basis.size() << "\n";
	for (std::size_t i = 0; i < basis.size(); ++i)
		print_table(out, basis[i], input.basis, "phi_" + std::to_string(i + 1));
	return 0;
}

int cmd_lemma1(const std::string& file, const Options& opt, std::ostream& out) {
	WorkbenchInput input = parse_input(file);
	std::vector<GroupVector> basis = lemma1_solve(input.table);
	std::vector<QVector> raw;
	for (const GroupVector& g : basis)
		raw.push_back(to_qvector(g));
	bool contains = span_contains(raw, to_qvector(named_vector("V_Lad")));
	if (opt.structured()) {
		json arr = json::array();
		for (const GroupVector& g : basis)
			arr.push_back(group_vector_json(g));
		out << json{{"solution_dimension", basis.size()},
		            {"basis", arr},
		            {"contains_v_lad", contains}}
		           .dump()
		    << "\n";
		return 0;
	}
	out << "solution dimension: " << basis.size() << "\n";
	for (const GroupVector& g : basis)
		out << "  w = " << format_group_vector(g) << "\n";
	out << "contains V_Lad: " << (contains ? "yes" : "no") << "\n";
	return 0;
}

int cmd_polarize(const std::string& file, const std::string& emit_prefix,
                 const Options& opt, std::ostream& out) {
	WorkbenchInput input = parse_input(file);
	Polarized p = polarize(input.table);
	std::vector<IdentityReport> reports;
	for (PoissonKind kind :
	     {PoissonKind::poisson, PoissonKind::nonassoc_poisson, PoissonKind::weakly_poisson,
	      PoissonKind::pseudo_poisson_rank5, PoissonKind::pseudo_poisson_leibniz})
		reports.push_back(poisson_family_check(p.rho, p.psi, kind));
	if (opt.structured()) {
		for (const IdentityReport& r : reports)
			out << witness_json(r).dump() << "\n";
	} else {
		print_table(out, p.rho, input.basis, "rho (symmetric part)");
		print_table(out, p.psi, input.basis, "psi (skew part)");
		for (const IdentityReport& r : reports)
			print_report(out, opt, r, &input.basis);
	}
	if (!emit_prefix.empty()) {
		std::ofstream rho_out(emit_prefix + ".rho.json");
		std::ofstream psi_out(emit_prefix + ".psi.json");
		if (!rho_out || !psi_out)
			throw ParseError("cannot write emitted files at prefix '" + emit_prefix + "'");
		rho_out << emit_algebra(p.rho, input.basis);
		psi_out << emit_algebra(p.psi, input.basis);
	}
	return exit_code_of(reports);
}

int cmd_polar_system(bool family_assoc, const std::string& vexpr, const std::string& wexpr,
                     std::size_t support, const std::map<std::string, Rational>& params,
                     const Options& opt, std::ostream& out) {
	QMatrix m;
	if (family_assoc) {
		m = polar_matrix_assoc();
	} else {
		GroupVector v = parse_group_vector(vexpr, params);
		GroupVector w = wexpr.empty() ? v : parse_group_vector(wexpr, params);
		m = polar_family_matrix(v, w);
	}
	std::vector<SparseRelation> relations = sparse_relations(m, support);
	if (opt.structured()) {
		json rels = json::array();
		for (const SparseRelation& r : relations) {
			json img = json::array();
			for (const Rational& x : r.image)
				img.push_back(x.str());
			json pre = json::array();
			for (const Rational& x : r.preimage)
				pre.push_back(x.str());
			rels.push_back({{"image", img}, {"preimage", pre}});
		}
		out << json{{"matrix", matrix_json(m)}, {"rank", rank(m)}, {"relations", rels}}.dump()
		    << "\n";
		return 0;
	}
	out << "N (rows = canonical terms, columns = basis twists):\n";
	print_matrix(out, m);
	out << "rank: " << rank(m) << "\n";
	out << "sparse relations (support <= " << support << "): " << relations.size() << "\n";
	for (const SparseRelation& r : relations) {
		PolarVector pv;
		for (std::size_t i = 0; i < 12; ++i)
			pv.c[i] = r.image[i];
		out << "  " << format_polar_vector(pv) << "\n";
		out << "    preimage: " << format_group_vector(group_vector_from(r.preimage))
		    << "\n";
	}
	return 0;
}

int cmd_c_family(const std::string& alpha_text, const Options& opt, std::ostream& out) {
	CFamilyReport rep = c_family_analysis(Rational::parse(alpha_text));
	if (opt.structured()) {
		json psi_part = json::array();
		for (const Rational& x : rep.psi_psi_part)
			psi_part.push_back(x.str());
		out << json{{"alpha", rep.alpha.str()},
		            {"gamma_published", rep.gamma_published.str()},
		            {"gamma_derived", rep.gamma_derived.str()},
		            {"v_alpha", group_vector_json(rep.v_alpha)},
		            {"twisted", group_vector_json(rep.twisted)},
		            {"psi_psi_part", psi_part},
		            {"leibniz_scale", rep.leibniz_scale.str()},
		            {"jacobi_scale", rep.jacobi_scale.str()},
		            {"pattern_ok", rep.pattern_ok},
		            {"residual_is_leibniz", rep.residual_is_leibniz},
		            {"v1_rank", rep.v1_rank},
		            {"alpha_in_weakly_assoc_span", rep.alpha_in_weakly_assoc_span}}
		           .dump()
		    << "\n";
		return 0;
	}
	out << "alpha: " << rep.alpha << "\n";
	out << "v(alpha) = " << format_group_vector(rep.v_alpha) << "\n";
	out << "v1 v(alpha) = " << format_group_vector(rep.twisted) << "\n";
	out << "expansion: " << format_polar_vector(rep.expansion) << "\n";
	out << "psi-psi part: (" << rep.psi_psi_part[0] << ", " << rep.psi_psi_part[1] << ", "
	    << rep.psi_psi_part[2] << ")\n";
	out << "gamma (published formula (2/3)(2a-1)): " << rep.gamma_published << "\n";
	out << "gamma (derived from the expansion):    " << rep.gamma_derived << "\n";
	out << "leibniz scale: " << rep.leibniz_scale << ", jacobi scale: " << rep.jacobi_scale
	    << ", decomposition " << (rep.pattern_ok ? "matches" : "DOES NOT match") << "\n";
	out << "residual identity is the Leibniz law: "
	    << (rep.residual_is_leibniz ? "yes" : "no") << "\n";
	out << "rank of M_{v1}: " << rep.v1_rank << " (invertible iff 6)\n";
	out << "v(alpha) in span(orbit(id - t12 + c)): "
	    << (rep.alpha_in_weakly_assoc_span ? "yes" : "no") << "\n";
	return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Exact workbench for Sigma_3-twisted associativity identities"};
	app.require_subcommand(1);
	Options opt;
	app.add_option("--format", opt.format, "Output format")
	    ->check(CLI::IsMember({"human", "structured"}));

	std::string file, vexpr, wexpr, mode = "diff", emit_prefix, alpha_text = "0";
	std::vector<std::string> raw_params;
	std::size_t order = 0, support = 3;
	std::string family;

	auto add_params = [&raw_params](CLI::App* cmd) {
		cmd->add_option("--param", raw_params, "Parameter binding name=rational");
	};

	CLI::App* classify_cmd = app.add_subcommand("classify", "Full identity catalog");
	classify_cmd->add_option("file", file, "Algebra input file")->required();

	CLI::App* check_cmd = app.add_subcommand("check", "Check one v- or (v,w)-identity");
	check_cmd->add_option("file", file)->required();
	check_cmd->add_option("--v", vexpr, "Vector expression")->required();
	check_cmd->add_option("--w", wexpr, "Second vector for a (v,w)-identity");
	check_cmd->add_option("--mode", mode, "pair or diff")
	    ->check(CLI::IsMember({"pair", "diff"}));
	add_params(check_cmd);

	CLI::App* rank_cmd = app.add_subcommand("rank", "Rank of a group-algebra vector");
	rank_cmd->add_option("--v", vexpr)->required();
	add_params(rank_cmd);

	CLI::App* orbit_cmd = app.add_subcommand("orbit", "Left translates of a vector");
	orbit_cmd->add_option("--v", vexpr)->required();
	add_params(orbit_cmd);

	CLI::App* mv_cmd = app.add_subcommand("mv", "M_v matrix, rank, kernel, V_Lad membership");
	mv_cmd->add_option("--v", vexpr)->required();
	add_params(mv_cmd);

	CLI::App* deform_cmd = app.add_subcommand("deform", "Verify a jet order by order");
	deform_cmd->add_option("file", file)->required();
	deform_cmd->add_option("--v", vexpr)->required();
	deform_cmd->add_option("--w", wexpr);
	deform_cmd->add_option("--order", order, "Truncation order")->required();
	add_params(deform_cmd);

	CLI::App* kernel_cmd = app.add_subcommand("delta2-kernel", "Order-1 cocycle space");
	kernel_cmd->add_option("file", file)->required();
	kernel_cmd->add_option("--v", vexpr)->required();
	add_params(kernel_cmd);

	CLI::App* lemma1_cmd = app.add_subcommand("lemma1", "Universal twist annihilators");
	lemma1_cmd->add_option("file", file)->required();

	CLI::App* polarize_cmd = app.add_subcommand("polarize", "Split into rho and psi");
	polarize_cmd->add_option("file", file)->required();
	polarize_cmd->add_option("--emit", emit_prefix, "Write <prefix>.rho.json/.psi.json");

	CLI::App* polar_cmd = app.add_subcommand("polar-system", "Polarized coefficient system");
	polar_cmd->add_option("--family", family, "Built-in family (assoc)")
	    ->check(CLI::IsMember({"assoc"}));
	polar_cmd->add_option("--v", vexpr);
	polar_cmd->add_option("--w", wexpr);
	polar_cmd->add_option("--support", support, "Maximum relation support");
	add_params(polar_cmd);

	CLI::App* cfam_cmd = app.add_subcommand("c-family", "Alpha-family analysis");
	cfam_cmd->add_option("--alpha", alpha_text)->required();

	std::vector<std::string> argv(args.rbegin(), args.rend());
	try {
		app.parse(argv);
	} catch (const CLI::ParseError& e) {
		if (e.get_exit_code() == 0) {
			// --help and friends
			out << app.help();
			return 0;
		}
		err << "error: " << e.what() << "\n";
		return 2;
	}

	try {
		std::map<std::string, Rational> params = parse_params(raw_params);
		if (classify_cmd->parsed())
			return cmd_classify(file, opt, out);
		if (check_cmd->parsed())
			return cmd_check(file, vexpr, wexpr, mode, params, opt, out);
		if (rank_cmd->parsed())
			return cmd_rank(vexpr, params, opt, out);
		if (orbit_cmd->parsed())
			return cmd_orbit(vexpr, params, opt, out);
		if (mv_cmd->parsed())
			return cmd_mv(vexpr, params, opt, out);
		if (deform_cmd->parsed())
			return cmd_deform(file, vexpr, wexpr, order, params, opt, out);
		if (kernel_cmd->parsed())
			return cmd_delta2_kernel(file, vexpr, params, opt, out);
		if (lemma1_cmd->parsed())
			return cmd_lemma1(file, opt, out);
		if (polarize_cmd->parsed())
			return cmd_polarize(file, emit_prefix, opt, out);
		if (polar_cmd->parsed()) {
			if (family.empty() && vexpr.empty()) {
				err << "error: polar-system needs --family assoc or --v\n";
				return 2;
			}
			return cmd_polar_system(family == "assoc", vexpr, wexpr, support, params, opt,
			                        out);
		}
		if (cfam_cmd->parsed())
			return cmd_c_family(alpha_text, opt, out);
	} catch (const ParseError& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::invalid_argument& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
	err << "error: no subcommand\n";
	return 2;
}

}  // namespace valgebra
