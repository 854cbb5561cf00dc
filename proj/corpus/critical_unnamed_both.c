int x;

void main()
{
#pragma omp parallel
    {
#pragma omp critical
        { x = x + 1; }
#pragma omp critical
        { x = x + 2; }
    }
}
