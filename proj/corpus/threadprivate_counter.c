int tally;

void main()
{
#pragma omp parallel threadprivate(tally)
    {
        tally = tally + 1;
    }
}
