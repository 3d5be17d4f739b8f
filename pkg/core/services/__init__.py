# Serviços: uma camada por módulo algébrico
