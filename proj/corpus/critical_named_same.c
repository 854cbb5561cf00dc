int x;

void main()
{
#pragma omp parallel
    {
#pragma omp critical (tally)
        { x = x + 1; }
#pragma omp critical (tally)
        { x = x + 2; }
    }
}
