from cli.management.commands._base import RunCommand


class Command(RunCommand):
    help = "Emit and verify a fully separable decomposition (v <= v_c)"
    command_name = "decompose"

    def add_arguments(self, parser):
        self.add_system_arguments(parser)
        self.add_coefficient_arguments(parser)
        self.add_visibility_arguments(parser)
        self.add_output_arguments(parser)
