#ifndef SCF_SCF_HPP
#define SCF_SCF_HPP

#include <scf/applications.hpp>
#include <scf/field_param.hpp>
#include <scf/identities.hpp>
#include <scf/integer.hpp>
#include <scf/interval.hpp>
#include <scf/polynomial.hpp>
#include <scf/real_embeddings.hpp>
#include <scf/report.hpp>
#include <scf/ring.hpp>
#include <scf/serialize.hpp>
#include <scf/small_norm.hpp>
#include <scf/unit_reduction.hpp>

#endif  // SCF_SCF_HPP
