// Copyright 2026 The Symket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symket/errors.h"
#include "symket/integrate.h"
#include "symket/measure.h"
#include "symket/operator.h"
#include "symket/povm.h"
#include "symket/scalar.h"
#include "symket/scalar_json.h"
#include "symket/state.h"

namespace py = pybind11;
using namespace symket;

namespace {

template <typename T>
T rename_or_prime(const T &value, const std::optional<std::string> &old_name, const std::optional<std::string> &new_name) {
    if (old_name.has_value() != new_name.has_value()) {
        throw py::value_error("replace_var takes both old and new, or neither");
    }
    if (!old_name) {
        return prime_variables(value);
    }
    return replace_var(value, *old_name, *new_name);
}

void init_scalars(py::module_ &m) {
    py::class_<Scalar>(m, "Scalar")
        .def(py::init<std::complex<double>>(), py::arg("value"))
        .def(py::init<double>(), py::arg("value"))
        .def(py::init([](long long value) { return Scalar(static_cast<double>(value)); }), py::arg("value"))
        .def("conjugate", [](const Scalar &s) { return conjugate(s); })
        .def("kind", [](const Scalar &s) { return s.repr().substr(0, s.repr().find('(')); })
        .def("to_json", [](const Scalar &s) { return to_json(s).dump(); })
        .def("__str__", &Scalar::str)
        .def("__repr__", &Scalar::repr)
        .def("__eq__", [](const Scalar &a, const Scalar &b) { return structurally_equal(a, b); })
        .def("__hash__", [](const Scalar &s) { return py::hash(py::str(simplify(s).key())); })
        .def("__add__", [](const Scalar &a, const Scalar &b) { return a + b; }, py::is_operator())
        .def("__radd__", [](const Scalar &a, const Scalar &b) { return b + a; }, py::is_operator())
        .def("__sub__", [](const Scalar &a, const Scalar &b) { return a - b; }, py::is_operator())
        .def("__rsub__", [](const Scalar &a, const Scalar &b) { return b - a; }, py::is_operator())
        .def("__mul__", [](const Scalar &a, const Scalar &b) { return a * b; }, py::is_operator())
        .def("__rmul__", [](const Scalar &a, const Scalar &b) { return b * a; }, py::is_operator())
        .def("__neg__", [](const Scalar &a) { return -a; })
        .def("__truediv__", [](const Scalar &a, const Scalar &b) { return a / b; }, py::is_operator());
    py::implicitly_convertible<long long, Scalar>();
    py::implicitly_convertible<double, Scalar>();
    py::implicitly_convertible<std::complex<double>, Scalar>();

    m.def("Variable", [](const std::string &name) { return Scalar::variable(name); }, py::arg("name"));
    m.def(
        "SingleVarFunctionScalar",
        [](const std::string &name, const std::string &var) { return Scalar::function(name, var); },
        py::arg("func_name"),
        py::arg("var_name"));
    m.def("InnerProductFunction", &Scalar::inner_product_function, py::arg("left"), py::arg("right"));
    m.def("DeltaFunction", &Scalar::delta, py::arg("var1"), py::arg("var2"));

    m.def("simplify", py::overload_cast<const Scalar &>(&simplify), py::arg("scalar"));
    m.def("expand", &expand, py::arg("scalar"));
    m.def("is_number", &is_number, py::arg("scalar"));
    m.def("to_complex", &to_complex, py::arg("scalar"));
    m.def("free_variables", py::overload_cast<const Scalar &>(&free_variables), py::arg("scalar"));
    m.def(
        "integrate",
        [](const Scalar &s, std::optional<std::set<std::string>> variables) {
            return variables ? integrate(s, *variables) : integrate(s);
        },
        py::arg("scalar"),
        py::arg("variables") = py::none());
    m.def("replace_var", &rename_or_prime<Scalar>, py::arg("scalar"), py::arg("old") = py::none(), py::arg("new") = py::none());
}

void init_states(py::module_ &m) {
    py::class_<FockOp>(m, "FockOp")
        .def(py::init<std::string, std::string>(), py::arg("mode"), py::arg("variable"))
        .def_property_readonly("mode", &FockOp::mode)
        .def_property_readonly("variable", &FockOp::variable)
        .def("__str__", &FockOp::str);

    py::class_<BaseState>(m, "BaseState")
        .def("to_state", [](const BaseState &b) { return to_state(b); })
        .def("inner_product", &BaseState::inner_product, py::arg("other"))
        .def("__matmul__", &BaseState::tensor_product, py::is_operator())
        .def("__eq__", &BaseState::operator==)
        .def("__hash__", [](const BaseState &b) { return py::hash(py::str(b.key())); })
        .def("__str__", &BaseState::ket)
        .def("__repr__", &BaseState::repr);

    m.def(
        "BaseQubitState", [](const std::string &digits) { return BaseState(QuditBaseState(digits)); }, py::arg("digits"));
    m.def(
        "BaseQuditState",
        [](const std::string &digits, int base) { return BaseState(QuditBaseState(digits, base)); },
        py::arg("digits"),
        py::arg("base") = 2);
    m.def(
        "BaseFockState",
        [](std::vector<FockOp> ops) { return BaseState(BaseFockState(std::move(ops))); },
        py::arg("fock_ops") = std::vector<FockOp>{});

    py::class_<State>(m, "State")
        .def(py::init<>())
        .def("inner_product", &State::inner_product, py::arg("other"))
        .def("__add__", [](const State &a, const State &b) { return a + b; }, py::is_operator())
        .def("__sub__", [](const State &a, const State &b) { return a - b; }, py::is_operator())
        .def("__neg__", [](const State &a) { return -a; })
        .def("__mul__", [](const State &s, const Scalar &c) { return s * c; }, py::is_operator())
        .def("__rmul__", [](const State &s, const Scalar &c) { return c * s; }, py::is_operator())
        .def("__truediv__", [](const State &s, const Scalar &c) { return s / c; }, py::is_operator())
        .def("__matmul__", [](const State &a, const State &b) { return tensor_product(a, b); }, py::is_operator())
        .def("__len__", &State::size)
        .def("free_variables", &State::free_variables)
        .def("__str__", &State::str)
        .def("__repr__", &State::repr);
    m.def("replace_var", &rename_or_prime<State>, py::arg("state"), py::arg("old") = py::none(), py::arg("new") = py::none());
}

void init_operators(py::module_ &m) {
    py::class_<BaseOperator>(m, "BaseOperator")
        .def(py::init<BaseState, BaseState>(), py::arg("left"), py::arg("right"))
        .def("to_operator", [](const BaseOperator &b) { return Operator(b); })
        .def("__str__", &BaseOperator::str);

    py::class_<Operator>(m, "Operator")
        .def(py::init<>())
        .def("dagger", &Operator::dagger)
        .def("simplify", &Operator::simplify)
        .def("free_variables", &Operator::free_variables)
        .def("to_matrix", [](const Operator &op) { return to_matrix(op); })
        .def("__add__", [](const Operator &a, const Operator &b) { return a + b; }, py::is_operator())
        .def("__sub__", [](const Operator &a, const Operator &b) { return a - b; }, py::is_operator())
        .def("__mul__", [](const Operator &a, const Operator &b) { return a * b; }, py::is_operator())
        .def("__mul__", [](const Operator &a, const State &s) { return a * s; }, py::is_operator())
        .def("__mul__", [](const Operator &a, const Scalar &c) { return a * c; }, py::is_operator())
        .def("__rmul__", [](const Operator &a, const Scalar &c) { return c * a; }, py::is_operator())
        .def("__len__", &Operator::size)
        .def("__str__", &Operator::str);

    m.def("outer_product", &outer_product, py::arg("ket"), py::arg("bra"));
    m.def("simplify", py::overload_cast<const Operator &>(&simplify), py::arg("operator"));
    m.def(
        "replace_var", &rename_or_prime<Operator>, py::arg("operator"), py::arg("old") = py::none(), py::arg("new") = py::none());

    py::class_<MeasurementResult<int>>(m, "MeasurementResult")
        .def_readonly("outcome", &MeasurementResult<int>::outcome)
        .def_readonly("probability", &MeasurementResult<int>::probability)
        .def_readonly("post_meas_state", &MeasurementResult<int>::post_meas_state)
        .def("__str__", &MeasurementResult<int>::str)
        .def("__repr__", &MeasurementResult<int>::str);
    m.def(
        "measure",
        [](const State &s, const std::map<int, Operator> &kraus_ops, std::optional<std::uint64_t> seed) {
            return measure(s, kraus_ops, seed);
        },
        py::arg("state"),
        py::arg("kraus_ops"),
        py::arg("seed") = py::none());
}

void init_povm(py::module_ &m) {
    m.def("get_fock_states", [] {
        auto s = povm::get_fock_states();
        return py::make_tuple(s.vacuum, s.phi, s.psi, s.phi_psi);
    });
    m.def("construct_beam_splitter", &povm::construct_beam_splitter);
    m.def("construct_projector", &povm::construct_projector, py::arg("num_left"), py::arg("num_right"));
    m.def(
        "compute_povm",
        [](int num_left, int num_right, double visibility) {
            return povm::compute_povm({num_left, num_right, visibility}).matrix;
        },
        py::arg("num_left"),
        py::arg("num_right"),
        py::arg("visibility") = 1.0);
}

}  // namespace

PYBIND11_MODULE(symket, m) {
    m.doc() = "Symbolic bra-ket algebra over qudit and Fock states";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<NotNumeric>(m, "NotNumeric", base.ptr());
    py::register_exception<DivergentIntegral>(m, "DivergentIntegral", base.ptr());
    py::register_exception<IncompatibleStates>(m, "IncompatibleStates", base.ptr());
    py::register_exception<VariableCollision>(m, "VariableCollision", base.ptr());
    py::register_exception<InvalidProbabilities>(m, "InvalidProbabilities", base.ptr());
    py::register_exception<UnsupportedProjector>(m, "UnsupportedProjector", base.ptr());
    py::register_exception<UnknownScalar>(m, "UnknownScalar", base.ptr());

    init_scalars(m);
    init_states(m);
    init_operators(m);
    init_povm(m);
}
