# Utils package: errors, config ingestion, batch evaluation, output writers
