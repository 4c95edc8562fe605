# -*- coding:utf-8 -*-

Kind_R                             = 'R'
Kind_J0                            = 'J0'
Kind_JPLUS                         = 'Jplus'
Kind_JMINUS                        = 'Jminus'
Kind_Q                             = 'Q'
Kind_P                             = 'P'
Kind_H                             = 'H'

OPERATOR_KINDS                     = ['R', 'J0', 'Jplus', 'Jminus', 'Q', 'P', 'H']
REALIZED_KINDS                     = ['J0', 'Jplus', 'Jminus', 'R']

Family_PSI                         = 'psi'
Family_PHI_MP                      = 'phi_mp'
Family_PSI_PARABOSON               = 'psi_paraboson'

Parity_EVEN                        = 'even'
Parity_ODD                         = 'odd'
Parity_NONE                        = 'none'

Route_CLOSED                       = 'closed'
Route_RECURRENCE                   = 'recurrence'

Limit_C_HALF                       = 'c_half'
Limit_C_INFINITY                   = 'c_infinity'

WeightForm_DIRECT                  = 'direct'
WeightForm_REWRITTEN               = 'rewritten'

Suite_GRAM                         = 'gram'
Suite_COMMUTATORS                  = 'commutators'
Suite_DIFF_RELATIONS               = 'diff-relations'
Suite_REALIZATION                  = 'realization'
Suite_LIMITS                       = 'limits'
Suite_CDH_ORTH                     = 'cdh-orth'
Suite_B_DEFORM                     = 'b-deform'
Suite_KERNEL                       = 'kernel'

SUITE_LIST                         = ['gram', 'commutators', 'diff-relations', 'realization',
                                      'limits', 'cdh-orth', 'b-deform', 'kernel']

Command_TABULATE                   = 'tabulate'
Command_VERIFY                     = 'verify'
Command_SPECTRUM                   = 'spectrum'
Command_GRAM                       = 'gram'

Format_CSV                         = 'csv'
Format_JSON                        = 'json'

# Hamiltonian shift of the three parameter algebra: H = J0 - (b + c - 1/2)
H_SHIFT_CONVENTION                 = 'H = J0 - (b + c - 1/2), spectrum n + a'

C_LADDER                           = [1e2, 1e3, 1e4]
COMPLETENESS_LEVELS                = [8, 16, 32, 64, 128, 256]
COMPLETENESS_WIDTH                 = 0.5
PARABOSON_CUSP_RADIUS              = 0.25
GENERATING_Z_GUARD                 = 0.9

DEFAULT_A                          = 1.0
DEFAULT_C                          = 1.0
DEFAULT_B                          = 0.0

Tol_GRAM                           = 1e-8
Tol_COMMUTATOR                     = 1e-12
Tol_DIFF_RELATION                  = 1e-9
Tol_ROUTE                          = 1e-9
Tol_C_HALF                         = 1e-10
Tol_C_INFINITY                     = 1e-2
Tol_REALIZATION                    = 1e-10
Tol_GENERATING                     = 1e-8
Tol_CDH_ORTH                       = 1e-8
Tol_B_DEFORM                       = 1e-9
Tol_COMPLETENESS                   = 1e-3
Tol_BETA_ORIGIN                    = 1e-12
Tol_WEIGHT_FORMS                   = 1e-9
Tol_EIGEN                          = 1e-10

CSV_FLOAT_FORMAT                   = '%.17g'
CSV_LINE_TERMINATOR                = '\n'
