from hypernets.conf import configure, Configurable, Int, Float


@configure()
class Config(Configurable):
    # quadrature
    quad_rel_tol = \
        Float(1e-12,
              config=True,
              help='relative tolerance of the panel refinement test in `integrate_real_line`.'
              )

    quad_abs_tol = \
        Float(1e-14,
              config=True,
              help='absolute tolerance of the panel refinement test and of the truncated tail.'
              )

    quad_panel_order = \
        Int(32,
            config=True,
            help='number of Gauss-Legendre nodes per panel, at least 8.'
            )

    quad_max_panels = \
        Int(4096,
            config=True,
            help='panel budget of one half line before the quadrature gives up.'
            )

    quad_min_halfwidth = \
        Float(40.,
              config=True,
              help='lower bound of the truncation half width L.'
              )

    quad_max_halfwidth = \
        Float(300.,
              config=True,
              help='upper bound of the truncation half width L, beyond it the weight underflows.'
              )

    # special functions
    imag_tol = \
        Float(1e-10,
              config=True,
              help='slack of the real-output assertion |Im| <= imag_tol * (1 + |Re|).'
              )

    series_max_terms = \
        Int(500,
            config=True,
            help='hard cap of terms of a nonterminating power series.'
            )

    series_term_tol = \
        Float(1e-16,
              config=True,
              help='relative size of the last term at which a nonterminating series stops.'
              )

    # execution
    n_jobs = \
        Int(1,
            config=True,
            help='joblib workers used by suites and grid evaluations.'
            )

    # command line grid
    x_min = \
        Float(-5.,
              config=True,
              help='default left end of the tabulation grid.'
              )

    x_max = \
        Float(5.,
              config=True,
              help='default right end of the tabulation grid.'
              )

    x_step = \
        Float(0.02,
              config=True,
              help='default step of the tabulation grid.'
              )

    nmax = \
        Int(16,
            config=True,
            help='default highest level for tabulation and verification.'
            )
