#include "boxdim/xyz.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

std::string formatPoint(const std::string& label, const Vec3& p) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s %.10f %.10f %.10f", label.c_str(),
                  p.x(), p.y(), p.z());
    return buf;
}

} // namespace

Structure loadXyz(const std::string& path, RadiusType radType) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open xyz file '" + path + "'");

    std::string line;
    if (!std::getline(in, line))
        throw ParseError(path + ": empty file, expected atom count on line 1");

    long declared = -1;
    {
        std::istringstream ss(line);
        if (!(ss >> declared) || declared < 1)
            throw ParseError(path + ": line 1: expected a positive atom count, got '" +
                             line + "'");
    }

    if (!std::getline(in, line))
        throw ParseError(path + ": missing comment line (line 2)");

    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(declared));
    for (long i = 0; i < declared; ++i) {
        const long lineNo = i + 3;
        if (!std::getline(in, line))
            throw ParseError(path + ": declared " + std::to_string(declared) +
                             " atoms but file ends after " + std::to_string(i) +
                             " coordinate lines");
        std::istringstream ss(line);
        Atom a;
        if (!(ss >> a.element >> a.position.x() >> a.position.y() >> a.position.z()))
            throw ParseError(path + ": line " + std::to_string(lineNo) +
                             ": expected 'element x y z', got '" + line + "'");
        a.radius = radiusFor(a.element, radType); // throws UnknownElementError
        atoms.push_back(std::move(a));
    }
    // Anything after the declared atoms (trajectory frames etc.) is ignored.

    return Structure(std::move(atoms));
}

void writeXyz(const Structure& structure, const std::string& path,
              const std::string& comment) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open '" + path + "' for writing");
    out << structure.size() << "\n" << comment << "\n";
    for (const Atom& a : structure.atoms())
        out << formatPoint(a.element, a.position) << "\n";
    if (!out)
        throw ParseError("write to '" + path + "' failed");
}

void writeXyzPoints(const std::vector<Vec3>& points, const std::string& label,
                    const std::string& path, const std::string& comment) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open '" + path + "' for writing");
    out << points.size() << "\n" << comment << "\n";
    for (const Vec3& p : points)
        out << formatPoint(label, p) << "\n";
    if (!out)
        throw ParseError("write to '" + path + "' failed");
}

} // namespace boxdim
