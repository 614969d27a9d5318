// Command-line front end: every library module behind one binary with JSON
// (and CSV for matrices) output. Exit codes: 0 ok, 2 validation failure,
// 3 size-limit refusal.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eqg/diagram.hpp"
#include "eqg/fusion.hpp"
#include "eqg/laws.hpp"
#include "eqg/models.hpp"
#include "eqg/serialize.hpp"
#include "eqg/weingarten.hpp"

using nlohmann::json;
using namespace eqg;

namespace {

double defaultTol() {
    if (const char* env = std::getenv("EQG_TOL")) return std::atof(env);
    return 1e-9;
}

// 'o' / 'b' / '-', each letter optionally followed by '*' to conjugate it.
Word parseCliWord(const std::string& s) {
    Word w;
    for (size_t i = 0; i < s.size(); ++i) {
        Color c;
        switch (s[i]) {
            case 'o': c = Color::White; break;
            case 'b': c = Color::Black; break;
            case '-': c = Color::Plain; break;
            default: throw DomainError("bad word letter '" + std::string(1, s[i]) + "'");
        }
        if (i + 1 < s.size() && s[i + 1] == '*') {
            c = complement(c);
            ++i;
        }
        w.push_back(c);
    }
    return w;
}

json ratJson(const Rat& r) { return json{{"num", numString(r)}, {"den", denString(r)}}; }

json polyJson(const Poly& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(ratJson(p.coeff(static_cast<unsigned>(k))));
    return json{{"coeffs", coeffs}, {"str", p.str()}};
}

json matrixJson(const RatMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(ratJson(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrixCsv(const RatMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ",";
            out += ratToString(m.at(r, c));
        }
        out += "\n";
    }
    return out;
}

void writeOutput(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload << std::endl;
        return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot open output file " + path);
    f << payload << "\n";
}

Cplx parseComplexEntry(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("exp(", 0) == 0 && s.back() == ')') {
        Rat frac = parseRat(s.substr(4, s.size() - 5));
        double x = static_cast<double>(frac);
        return std::polar(1.0, 2 * 3.14159265358979323846 * x);
    }
    // "a", "bi", "a+bi", "a-bi" with decimal a, b
    double re = 0, im = 0;
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    if (s.back() == 'i') {
        std::string imStr = split == std::string::npos ? s.substr(0, s.size() - 1)
                                                       : s.substr(split, s.size() - split - 1);
        if (imStr.empty() || imStr == "+") imStr = "1";
        else if (imStr == "-") imStr = "-1";
        im = std::stod(imStr);
        if (split != std::string::npos) re = std::stod(s.substr(0, split));
    } else {
        re = std::stod(s);
    }
    return Cplx(re, im);
}

HadamardMatrix loadHadamard(const std::string& path, double tol) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot read input file " + path);
    json doc;
    f >> doc;
    const json& rows = doc.contains("entries") ? doc.at("entries") : doc;
    int n = static_cast<int>(rows.size());
    CMat h(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows.at(i).size()) != n)
            throw DomainError("Hadamard input is not square");
        for (int j = 0; j < n; ++j) {
            const json& cell = rows.at(i).at(j);
            h(i, j) = cell.is_string() ? parseComplexEntry(cell.get<std::string>())
                                       : Cplx(cell.get<double>(), 0.0);
        }
    }
    return makeHadamard(h, tol);
}

json decompositionJson(const Decomposition& d) {
    json out = json::object();
    for (const auto& [label, mult] : d) out[label.str()] = mult.str();
    return out;
}

struct Options {
    std::string family = "P";
    std::string upper, lower, word;
    std::string out = "-";
    std::string format = "json";
    std::string t = "1";
    int N = 0, s = 1, legs = -1, k = -1, kmax = 4, pmax = 3, sizeBound = 4, samples = 10000;
    std::uint64_t seed = 42;
    double tol = defaultTol();
};

int run(int argc, char** argv) {
    CLI::App app{"exact partition-category calculus for easy quantum groups"};
    app.require_subcommand(1);
    Options o;

    auto addWordOpts = [&](CLI::App* c) {
        c->add_option("--word", o.word, "colored word over {o,b,-}, '*' conjugates a letter");
        c->add_option("--legs", o.legs, "number of plain lower legs (shortcut for --word)");
        c->add_option("--upper", o.upper, "upper-row word");
        c->add_option("--lower", o.lower, "lower-row word");
    };
    auto resolveRows = [&]() -> std::pair<Word, Word> {
        if (!o.upper.empty() || !o.lower.empty())
            return {parseCliWord(o.upper), parseCliWord(o.lower)};
        if (!o.word.empty()) return {Word{}, parseCliWord(o.word)};
        if (o.legs >= 0) return {Word{}, plainWord(o.legs)};
        throw DomainError("give --word, --legs, or --upper/--lower");
    };

    auto* cEnum = app.add_subcommand("enumerate", "list the members of a partition family");
    cEnum->add_option("--family", o.family)->required();
    cEnum->add_option("--s", o.s, "modulus for Ps/NCs");
    addWordOpts(cEnum);
    cEnum->add_option("--out", o.out);

    auto* cGen = app.add_subcommand("generate", "close a generator set under the category operations");
    std::vector<std::string> generatorTexts;
    cGen->add_option("--generator", generatorTexts, "partition text, repeatable")->required();
    cGen->add_option("--size-bound", o.sizeBound, "max legs per row in the closure");
    cGen->add_option("--out", o.out);

    auto* cInt = app.add_subcommand("integrate", "Haar-integrate a coordinate monomial");
    std::string iList, jList;
    bool twisted = false;
    cInt->add_option("--family", o.family)->required();
    cInt->add_option("--N", o.N)->required();
    cInt->add_option("--s", o.s);
    cInt->add_option("--word", o.word);
    cInt->add_option("--i", iList, "comma list of row indices")->required();
    cInt->add_option("--j", jList, "comma list of column indices")->required();
    cInt->add_flag("--twisted", twisted, "use signed (twisted) delta functions");
    cInt->add_option("--out", o.out);

    auto* cGram = app.add_subcommand("gram", "exact Gram matrix of a partition family");
    auto* cWg = app.add_subcommand("weingarten", "exact Weingarten matrix of a partition family");
    for (CLI::App* c : {cGram, cWg}) {
        c->add_option("--family", o.family)->required();
        c->add_option("--N", o.N)->required();
        c->add_option("--s", o.s);
        addWordOpts(c);
        c->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
        c->add_option("--out", o.out);
    }

    auto* cLaw = app.add_subcommand("law", "moments of a limiting law");
    auto* cCum = app.add_subcommand("cumulants", "cumulants of a limiting law");
    std::string lawName = "Gaussian", mode = "classical";
    for (CLI::App* c : {cLaw, cCum}) {
        c->add_option("--name", lawName, "law or family name")->required();
        c->add_option("--t", o.t, "parameter as p/q");
        c->add_option("--s", o.s);
        c->add_option("--kmax", o.kmax);
        c->add_option("--out", o.out);
    }
    cCum->add_option("--mode", mode)->check(CLI::IsMember({"classical", "free"}));

    auto* cBp = app.add_subcommand("bp-check", "classical vs free cumulant comparison");
    std::string classicalFam, freeFam;
    cBp->add_option("--classical", classicalFam)->required();
    cBp->add_option("--free", freeFam)->required();
    cBp->add_option("--kmax", o.kmax);
    cBp->add_option("--out", o.out);

    auto* cFus = app.add_subcommand("fusion", "tensor-power decomposition into irreducibles");
    cFus->add_option("--family", o.family)->required();
    cFus->add_option("--k", o.k);
    cFus->add_option("--word", o.word);
    cFus->add_option("--N", o.N, "dimension parameter (optional)");
    cFus->add_option("--out", o.out);

    auto* cGrow = app.add_subcommand("growth", "cumulative squared-dimension series");
    cGrow->add_option("--family", o.family)->required();
    cGrow->add_option("--N", o.N)->required();
    cGrow->add_option("--kmax", o.kmax);
    cGrow->add_option("--out", o.out);

    auto* cModel = app.add_subcommand("model", "matrix-model construction and verification");
    cModel->require_subcommand(1);
    auto* cCheck = cModel->add_subcommand("check", "magic + stationarity checks on a Hadamard model");
    std::string inputPath;
    cCheck->add_option("--input", inputPath, "Hadamard matrix JSON")->required();
    cCheck->add_option("--pmax", o.pmax);
    cCheck->add_option("--tol", o.tol);
    cCheck->add_option("--out", o.out);
    auto* cMom = cModel->add_subcommand("moments", "correlation tensors and character moments");
    std::string weylGroup, sampler = "su2", hookMode = "exact";
    int fourierN = 0, antidiagN = 0;
    cMom->add_option("--weyl", weylGroup, "cyclic orders, e.g. z2 or 2x2");
    cMom->add_option("--fourier", fourierN, "Fourier model F_N");
    cMom->add_option("--antidiagonal", antidiagN, "antidiagonal model over U_N");
    cMom->add_option("--group", sampler)->check(CLI::IsMember({"su2", "un"}));
    cMom->add_option("--mode", hookMode)->check(CLI::IsMember({"exact", "mc"}));
    cMom->add_option("--pmax", o.pmax);
    cMom->add_option("--samples", o.samples);
    cMom->add_option("--seed", o.seed);
    cMom->add_option("--tol", o.tol);
    cMom->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    json result;
    result["v"] = 1;
    std::string payload;

    if (cEnum->parsed()) {
        auto [up, low] = resolveRows();
        Family fam = Family::parse(o.family);
        if (fam.tag == Family::Tag::Ps || fam.tag == Family::Tag::NCs) fam.s = o.s;
        auto members = enumerateFamily(fam, up, low);
        result["family"] = fam.name();
        result["cell"] = wordToString(up) + "/" + wordToString(low);
        result["count"] = members.size();
        json list = json::array();
        for (const auto& pi : members) list.push_back(partitionToText(pi));
        result["partitions"] = std::move(list);
    } else if (cGen->parsed()) {
        std::vector<SetPartition> gens;
        for (const auto& text : generatorTexts) gens.push_back(parsePartitionText(text));
        GeneratedCategory cat = generateCategory(gens, o.sizeBound);
        json cells = json::array();
        for (const auto& [cellKey, members] : cat.members) {
            json cell;
            cell["cell"] = cellKey.first + "/" + cellKey.second;
            cell["count"] = members.size();
            json list = json::array();
            for (const auto& pi : members) list.push_back(partitionToText(pi));
            cell["partitions"] = std::move(list);
            cells.push_back(std::move(cell));
        }
        result["size_bound"] = o.sizeBound;
        result["cells"] = std::move(cells);
    } else if (cInt->parsed()) {
        Family fam = Family::parse(o.family);
        if (fam.tag == Family::Tag::Ps || fam.tag == Family::Tag::NCs) fam.s = o.s;
        Monomial m;
        m.i = parseIntList(iList);
        m.j = parseIntList(jList);
        m.word = o.word.empty() ? plainWord(static_cast<int>(m.i.size())) : parseCliWord(o.word);
        Rat value = twisted ? integrateTwisted(fam, o.N, m) : integrate(fam, o.N, m);
        result["num"] = numString(value);
        result["den"] = denString(value);
    } else if (cGram->parsed() || cWg->parsed()) {
        auto [up, low] = resolveRows();
        if (!up.empty()) throw DomainError("gram/weingarten act on one-row words");
        Family fam = Family::parse(o.family);
        if (fam.tag == Family::Tag::Ps || fam.tag == Family::Tag::NCs) fam.s = o.s;
        PartitionIndexedMatrix m =
            cGram->parsed() ? gram(fam, low, o.N) : weingartenMatrix(fam, low, o.N);
        if (o.format == "csv") {
            payload = matrixCsv(m.entries);
        } else {
            json basis = json::array();
            for (const auto& pi : m.basis) basis.push_back(partitionToText(pi));
            result["family"] = fam.name();
            result["N"] = o.N;
            result["word"] = wordToString(low);
            result["basis"] = std::move(basis);
            result["matrix"] = matrixJson(m.entries);
        }
    } else if (cLaw->parsed() || cCum->parsed()) {
        LawSpec spec = LawSpec::parse(lawName, parseRat(o.t), o.s);
        if (spec.wordIndexed())
            throw DomainError("colored laws are word-indexed; use the library API");
        std::map<int, Rat> moments;
        for (int n = 1; n <= o.kmax; ++n) moments[n] = lawMoments(spec, n);
        json arr = json::array();
        if (cLaw->parsed()) {
            for (const auto& [n, v] : moments)
                arr.push_back(json{{"order", n}, {"num", numString(v)}, {"den", denString(v)}});
        } else {
            CumulantMode cm = mode == "classical" ? CumulantMode::Classical : CumulantMode::Free;
            for (const auto& [n, v] : momentsToCumulants(moments, cm))
                arr.push_back(json{{"order", n}, {"num", numString(v)}, {"den", denString(v)}});
            result["mode"] = mode;
        }
        result["name"] = lawName;
        result["t"] = o.t;
        result[cLaw->parsed() ? "moments" : "cumulants"] = std::move(arr);
    } else if (cBp->parsed()) {
        BPReport rep = bercoviciPataCheck(Family::parse(classicalFam), Family::parse(freeFam), o.kmax);
        result["classical"] = classicalFam;
        result["free"] = freeFam;
        result["kmax"] = o.kmax;
        result["pass"] = rep.pass;
        result["failures"] = rep.failures;
    } else if (cFus->parsed()) {
        FusionFamily fam;
        if (o.family == "OPlus") fam = FusionFamily::OPlus;
        else if (o.family == "SPlus") fam = FusionFamily::SPlus;
        else if (o.family == "UPlus") fam = FusionFamily::UPlus;
        else throw DomainError("fusion family must be OPlus, SPlus, or UPlus");
        Decomposition d = fam == FusionFamily::UPlus
                              ? tensorPowerDecompose(fam, parseCliWord(o.word))
                              : tensorPowerDecompose(fam, o.k < 0 ? 0 : o.k);
        result["family"] = o.family;
        result["decomposition"] = decompositionJson(d);
        if (o.N > 0) {
            Int total = 0;
            for (const auto& [label, mult] : d) total += mult * dimension(fam, label, o.N);
            result["total_dimension"] = total.str();
        }
    } else if (cGrow->parsed()) {
        FusionFamily fam;
        if (o.family == "OPlus") fam = FusionFamily::OPlus;
        else if (o.family == "SPlus") fam = FusionFamily::SPlus;
        else if (o.family == "UPlus") fam = FusionFamily::UPlus;
        else throw DomainError("growth family must be OPlus, SPlus, or UPlus");
        json arr = json::array();
        for (const Int& b : growthSeries(fam, o.N, o.kmax)) arr.push_back(b.str());
        result["family"] = o.family;
        result["N"] = o.N;
        result["b"] = std::move(arr);
    } else if (cCheck->parsed()) {
        HadamardMatrix h = loadHadamard(inputPath, o.tol);
        MagicModel m = hadamardModel(h);
        m.tol = o.tol;
        MagicReport magic = isMagic(m);
        StationarityReport st = stationarityCheck(m, o.pmax, o.tol);
        result["N"] = h.N;
        result["tol"] = o.tol;
        result["magic"] = json{{"pass", magic.pass},
                               {"projection_residual", magic.maxProjectionResidual},
                               {"row_residual", magic.maxRowResidual},
                               {"col_residual", magic.maxColResidual}};
        result["stationarity"] = json{{"pass", st.pass}, {"residuals", st.residuals}};
    } else if (cMom->parsed()) {
        MagicModel m;
        if (fourierN > 0) {
            m = hadamardModel(cyclicFourier(fourierN));
        } else if (antidiagN > 0) {
            m = antidiagonalModel(antidiagN);
        } else if (!weylGroup.empty()) {
            FiniteAbelianGroup g;
            std::stringstream ss(weylGroup[0] == 'z' || weylGroup[0] == 'Z'
                                     ? weylGroup.substr(1)
                                     : weylGroup);
            std::string part;
            while (std::getline(ss, part, 'x')) g.cyclicOrders.push_back(std::stoi(part));
            m = weylModel(g, sampler == "su2" ? SamplerKind::SU2 : SamplerKind::HaarUnitary);
        } else {
            throw DomainError("give one of --weyl, --fourier, --antidiagonal");
        }
        m.tol = o.tol;
        HookMode hook = hookMode == "exact" ? HookMode::Exact : HookMode::MonteCarlo;
        StationarityReport st = stationarityCheck(m, o.pmax, o.tol, hook, o.samples, o.seed);
        json moments = json::array();
        if (hook == HookMode::Exact)
            for (int p = 1; p <= o.pmax; ++p)
                moments.push_back(json{{"p", p}, {"moment", hopfCharacterMoment(m, p)}});
        result["tol"] = o.tol;
        result["mode"] = hookMode;
        if (hook == HookMode::MonteCarlo) {
            result["samples"] = o.samples;
            result["seed"] = o.seed;
        }
        result["stationarity"] = json{{"pass", st.pass}, {"residuals", st.residuals}};
        result["character_moments"] = std::move(moments);
    }

    if (payload.empty()) payload = result.dump(2);
    writeOutput(o.out, payload);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << std::endl;
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
