class PlanningError(Exception):
    """No admissible reduction plan was found, or a plan does not fit its diagram"""
    pass
