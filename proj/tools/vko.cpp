// vko: command-line front end for the obstruction and linking toolkit.

#include "vko/error.hpp"
#include "vko/gallery.hpp"
#include "vko/io.hpp"
#include "vko/linking.hpp"
#include "vko/obstruction.hpp"
#include "vko/plmap.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void emit(const vko::Json& j, const std::string& out)
{
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw vko::InvalidInput("cannot write " + out);
    f << j.dump(2) << '\n';
}

std::filesystem::path dirOf(const std::string& file)
{
    return std::filesystem::path(file).parent_path();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized van Kampen obstruction and r-linking numbers, in exact arithmetic"};
    app.require_subcommand(1);

    std::string out;
    std::uint64_t seed = 0;

    auto* gallery = app.add_subcommand("gallery", "Write a named complex or ornament as JSON");
    std::string galleryName;
    bool list = false;
    gallery->add_option("name", galleryName, "Object name, e.g. skeleton-2-6, fkt, product-ornament-2-3, cnld1");
    gallery->add_flag("--list", list, "Print the example names and exit");
    gallery->add_option("--out", out, "Output file (default: stdout)");

    auto* obstruction = app.add_subcommand("obstruction", "Decide triviality of the van Kampen obstruction");
    std::string complexFile;
    int k = 0, r = 0;
    std::string ring = "z";
    bool witness = false;
    vko::ObstructionOptions options;
    obstruction->add_option("--complex", complexFile, "Complex JSON file")->required();
    obstruction->add_option("--k", k, "k, with d = kr")->required();
    obstruction->add_option("--r", r, "Multiplicity r >= 2")->required();
    obstruction->add_option("--ring", ring, "Coefficient ring")->check(CLI::IsMember({"z", "z2"}))->capture_default_str();
    obstruction->add_option("--seed", seed, "Seed of the generic map")->capture_default_str();
    obstruction->add_option("--max-cells", options.cellBudget, "Deleted-product cell budget")->capture_default_str();
    obstruction->add_option("--max-matrix", options.matrixBudget, "Row and column budget of the folded system")
        ->capture_default_str();
    obstruction->add_flag("--witness", witness, "Include the cochain φ with δφ = c");
    obstruction->add_option("--out", out, "Output file (default: stdout)");

    auto* linking = app.add_subcommand("linking", "r-linking number of an ornament");
    std::string ornamentFile;
    int repeat = 1;
    linking->add_option("--ornament", ornamentFile, "Ornament JSON file")->required();
    linking->add_option("--seed", seed, "Apex seed")->capture_default_str();
    linking->add_option("--repeat", repeat, "Number of apex seeds seed, seed+1, ...")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    linking->add_option("--out", out, "Output file (default: stdout)");

    auto* parity = app.add_subcommand("parity", "Parity of the number of intersecting disjoint top-simplex pairs");
    int d = 0, trials = 1;
    parity->add_option("--complex", complexFile, "Complex JSON file")->required();
    parity->add_option("--d", d, "Ambient dimension")->required();
    parity->add_option("--trials", trials, "Number of generic maps")->check(CLI::NonNegativeNumber)->capture_default_str();
    parity->add_option("--seed", seed, "Seed")->capture_default_str();
    parity->add_option("--out", out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gallery) {
            if (list) {
                for (const auto& n : vko::galleryNames())
                    std::cout << n << '\n';
                return 0;
            }
            if (galleryName.empty())
                throw vko::InvalidInput("gallery needs a name (see --list)");
            auto obj = vko::galleryObject(galleryName);
            if (auto* c = std::get_if<vko::SimplicialComplex>(&obj))
                emit(vko::complexToJson(*c), out);
            else
                emit(vko::ornamentToJson(std::get<vko::Ornament>(obj)), out);
        } else if (*obstruction) {
            auto complex = vko::complexFromJson(vko::readJsonFile(complexFile));
            auto report = vko::obstructionTrivial(complex, k, r, ring == "z" ? vko::Ring::Z : vko::Ring::Z2, seed, options);
            emit(vko::reportToJson(report, witness), out);
        } else if (*linking) {
            auto orn = vko::ornamentFromJson(vko::readJsonFile(ornamentFile), dirOf(ornamentFile));
            vko::Json j;
            j["name"] = orn.name;
            j["d"] = orn.d;
            j["r"] = orn.r();
            j["k"] = orn.k();
            vko::Json seeds = vko::Json::array(), values = vko::Json::array();
            long long first = 0;
            bool constant = true;
            for (int i = 0; i < repeat; ++i) {
                const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
                const long long lk = vko::rLinkingNumber(orn, s);
                if (i == 0)
                    first = lk;
                constant = constant && lk == first;
                seeds.push_back(s);
                values.push_back(lk);
            }
            j["linking_number"] = first;
            j["seeds"] = std::move(seeds);
            j["values"] = std::move(values);
            j["constant"] = constant;
            emit(j, out);
        } else if (*parity) {
            auto complex = vko::complexFromJson(vko::readJsonFile(complexFile));
            auto parities = vko::vanKampenParity(complex, d, trials, seed);
            const auto odd = static_cast<std::size_t>(std::count(parities.begin(), parities.end(), 1));
            vko::Json j;
            j["complex"] = complex.name();
            j["d"] = d;
            j["trials"] = trials;
            j["seed"] = seed;
            j["parities"] = parities;
            j["odd"] = odd;
            j["even"] = parities.size() - odd;
            j["all_odd"] = odd == parities.size();
            emit(j, out);
        }
    } catch (const vko::Error& e) {
        std::cerr << "vko: " << e.what() << '\n';
        return e.exitCode();
    } catch (const std::exception& e) {
        std::cerr << "vko: internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
