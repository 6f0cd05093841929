#pragma once

#include "orthocyc/rational.hpp"
#include "orthocyc/partitions.hpp"
#include "orthocyc/field.hpp"
#include "orthocyc/poly.hpp"
#include "orthocyc/series.hpp"
#include "orthocyc/orders.hpp"
#include "orthocyc/cycleindex.hpp"
#include "orthocyc/enumerate.hpp"
#include "orthocyc/unipotent.hpp"
#include "orthocyc/measures.hpp"
#include "orthocyc/oracle/matrix.hpp"
#include "orthocyc/oracle/forms.hpp"
#include "orthocyc/oracle/group.hpp"
#include "orthocyc/oracle/tables.hpp"
#include "orthocyc/verify.hpp"
