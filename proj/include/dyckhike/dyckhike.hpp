#pragma once

#include "boson.hpp"
#include "dyck.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "evolution.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "pade.hpp"
#include "parser.hpp"
#include "polynomial.hpp"
#include "radical.hpp"
